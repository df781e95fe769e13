#pragma once

#include "jbt/element.hpp"
#include "jbt/linear_map.hpp"

namespace jbt {
inline namespace factors {

// {x, y, z}: linear in x and z, conjugate-linear in y.
//   matrix factor:      (x y* z + z y* x) / 2
//   commutative factor: componentwise x * conj(y) * z
//   direct sums:        partwise
Element triple_product(const Element& x, const Element& y, const Element& z);

// D(x,y): the linear map z -> {x, y, z}.
LinearMap d_operator(const Element& x, const Element& y);

// Q_x: the conjugate-linear map z -> {x, z, x}.
ConjugateLinearMap q_operator(const Element& x);

} // namespace factors
} // namespace jbt
