#ifndef DPD_PARSE_HPP
#define DPD_PARSE_HPP

#include <string_view>

#include "dpd/error.hpp"
#include "dpd/localize.hpp"
#include "dpd/poly.hpp"
#include "dpd/weyl.hpp"

namespace dpd {

// Text grammars, whitespace-insensitive, round-tripping exactly with the
// corresponding str() printers:
//   scalar:     integer, a/b, or residue
//   polynomial: x1..xN variables, ^ powers, * products, +/- sums
//               e.g. 3*x1^2*x2 - 1/2
//   operator:   adds D[i,t] atoms (variable i, order t); * composes in
//               written order and the result is normalized on parse
//               e.g. x1^2*D[1,3] + 5*D[2,1]
//   fraction:   <poly> / f^<j> with f fixed by the context

Scalar parse_scalar(std::string_view text, Field k);
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, Field k);
DiffOp parse_operator(std::string_view text, std::size_t nvars, Field k);
Fraction parse_fraction(std::string_view text, const ContextPtr& ctx);

} // namespace dpd

#endif
