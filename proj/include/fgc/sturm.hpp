#pragma once

#include <vector>

#include "fgc/ball.hpp"
#include "fgc/numberfield.hpp"
#include "fgc/poly.hpp"

namespace fgc::real {

// open isolating interval (lo, hi) around a simple real root; the polynomial
// does not vanish at either endpoint
struct RootInterval {
    Rat lo, hi;
};

// isolating intervals for all real roots, ascending; multiple roots are
// reported once (the squarefree part is isolated)
std::vector<RootInterval> isolate_real_roots(const std::vector<Int>& f);

// shrink an isolating interval to width <= target (same unique root inside)
RootInterval refine_root(const std::vector<Int>& f, RootInterval iv, const Rat& target);

// enclosure of the root at radius <= 2^-prec
Ball root_enclosure(const std::vector<Int>& f, const RootInterval& iv, long prec);

// real embeddings of a number field, one per real root of its defining
// polynomial, ordered by the embedded image of the generator
struct RealEmbedding {
    std::vector<Int> minpoly;
    RootInterval iv;
};

std::vector<RealEmbedding> real_embeddings(const exact::NumberField& k);

// enclosure of the image of x under the embedding, radius <= 2^-prec
Ball embed_element(const RealEmbedding& e, const exact::NfElement& x, long prec);

// enclosure of ln |sigma(x)| for nonzero x
Ball log_abs_embed(const RealEmbedding& e, const exact::NfElement& x, long prec);

} // namespace fgc::real
