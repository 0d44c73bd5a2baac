#include "fgc/groupspec.hpp"

#include "fgc/errors.hpp"

namespace fgc {

void validate(const TorusSpec& spec) {
    if (spec.dim < 1) throw ConfigError("torus dimension must be positive");
    if (spec.gens.empty()) throw ConfigError("generator list is empty");
    for (const auto& g : spec.gens) {
        if (int(g.size()) != spec.dim) throw ConfigError("generator arity does not match torus dimension");
        for (const Rat& x : g)
            if (x == 0) throw ConfigError("torus generator has a zero coordinate");
    }
}

void validate(const WeilSpec& spec) {
    if (!spec.field) throw ConfigError("missing number field");
    if (spec.gens.empty()) throw ConfigError("generator list is empty");
    for (const auto& g : spec.gens) {
        if (g.field() != spec.field) throw ConfigError("generator from a different field");
        if (g.is_zero()) throw ConfigError("zero is not a torus point");
    }
}

void validate_shape(const EllipticSpec& spec) {
    if (spec.a.size() != 5) throw ConfigError("expected coefficients a1, a2, a3, a4, a6");
    if (spec.copies < 1) throw ConfigError("number of curve factors must be positive");
    if (spec.gens.empty()) throw ConfigError("generator list is empty");
    for (const auto& g : spec.gens)
        if (int(g.size()) != spec.copies)
            throw ConfigError("generator arity does not match the number of curve factors");
}

} // namespace fgc
