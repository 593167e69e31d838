#include "dpd/quotient.hpp"

#include <sstream>
#include <stdexcept>

namespace dpd {

RationalPoint::RationalPoint(std::vector<Scalar> coords)
    : c_(std::move(coords)), field_(c_.empty() ? Field::rationals() : c_.front().field()) {
    if (c_.empty()) throw std::invalid_argument("rational point needs at least one coordinate");
    for (const auto& s : c_) {
        if (s.field() != field_) throw std::invalid_argument("rational point mixes fields");
    }
}

RationalPoint RationalPoint::origin(std::size_t nvars, Field f) {
    return RationalPoint(std::vector<Scalar>(nvars, Scalar::zero(f)));
}

bool RationalPoint::is_origin() const {
    for (const auto& s : c_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

QuotientElem QuotientElem::one(std::size_t nvars, Field f) {
    return basis(std::vector<std::uint32_t>(nvars, 0), f);
}

QuotientElem QuotientElem::basis(std::vector<std::uint32_t> dexp, Field f) {
    QuotientElem z(dexp.size(), f);
    z.add_term(dexp, Scalar::one(f));
    return z;
}

void QuotientElem::add_term(const std::vector<std::uint32_t>& dexp, const Scalar& c) {
    if (dexp.size() != n_) throw std::invalid_argument("quotient element ambient mismatch");
    if (c.field() != field_) throw std::invalid_argument("coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(dexp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QuotientElem QuotientElem::operator-() const {
    QuotientElem r(n_, field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

QuotientElem operator+(const QuotientElem& a, const QuotientElem& b) {
    if (a.n_ != b.n_ || a.field_ != b.field_) {
        throw std::invalid_argument("quotient element ambient mismatch");
    }
    QuotientElem r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

QuotientElem operator-(const QuotientElem& a, const QuotientElem& b) {
    return a + (-b);
}

QuotientElem QuotientElem::scaled(const Scalar& c) const {
    if (c.field() != field_) throw std::invalid_argument("scalar field mismatch");
    QuotientElem r(n_, field_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
}

DiffOp QuotientElem::lift() const {
    DiffOp a(n_, field_);
    for (const auto& [dexp, c] : terms_) {
        a.add_term(OpMonomial(std::vector<std::uint32_t>(n_, 0), dexp), c);
    }
    return a;
}

bool operator==(const QuotientElem& a, const QuotientElem& b) {
    if (a.n_ != b.n_ || a.field_ != b.field_) {
        throw std::invalid_argument("quotient element ambient mismatch");
    }
    return a.terms_ == b.terms_;
}

std::string QuotientElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Scalar c = it->second;
        bool negative = false;
        if (field_.is_rational() && c.rat() < 0) {
            negative = true;
            c = -c;
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (!c.is_one()) out << c.str() << "*";
        out << "Dbar[";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (i) out << ",";
            out << it->first[i];
        }
        out << "]";
    }
    return out.str();
}

QuotientElem reduce_mod_point_ideal(const DiffOp& a, const RationalPoint& pt) {
    if (a.vars() != pt.vars() || a.field() != pt.field()) {
        throw std::invalid_argument("operator/point ambient mismatch");
    }
    QuotientElem z(a.vars(), a.field());
    for (const auto& [dexp, poly] : right_normal_form(a)) {
        z.add_term(dexp, poly.eval(pt.coords()));
    }
    return z;
}

QuotientElem left_act(const DiffOp& a, const QuotientElem& z, const RationalPoint& pt) {
    if (a.vars() != z.vars() || a.field() != z.field()) {
        throw std::invalid_argument("operator/element ambient mismatch");
    }
    return reduce_mod_point_ideal(a * z.lift(), pt);
}

std::uint32_t annihilator_power(const QuotientElem& z, const RationalPoint& pt) {
    if (z.is_zero()) throw std::invalid_argument("annihilator power of zero");
    const std::size_t n = z.vars();
    Field k = z.field();
    // generators x_i - c_i of the maximal ideal
    std::vector<DiffOp> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(DiffOp::of_polynomial(
            Polynomial::variable(n, i, k) - Polynomial::constant(n, pt.coords()[i])));
    }
    // safe upper bound: sum of (max exponent + 1) over the coordinates
    std::uint32_t cap = 0;
    std::vector<std::uint32_t> maxexp(n, 0);
    for (const auto& [dexp, c] : z.terms()) {
        (void)c;
        for (std::size_t i = 0; i < n; ++i) maxexp[i] = std::max(maxexp[i], dexp[i]);
    }
    for (std::size_t i = 0; i < n; ++i) cap += maxexp[i] + 1;

    std::vector<QuotientElem> layer = {z};
    for (std::uint32_t power = 1; power <= cap; ++power) {
        std::vector<QuotientElem> next;
        bool all_zero = true;
        for (const auto& w : layer) {
            for (const auto& g : gens) {
                QuotientElem gw = left_act(g, w, pt);
                if (gw.is_zero()) continue;
                all_zero = false;
                // generator products that differ only in order coincide
                bool seen = false;
                for (const auto& known : next) {
                    if (known == gw) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) next.push_back(std::move(gw));
            }
        }
        if (all_zero) return power;
        layer = std::move(next);
    }
    throw std::logic_error("annihilator power exceeded its guaranteed bound");
}

SocleMultiplier socle_multiplier(const QuotientElem& z) {
    if (z.is_zero()) throw std::invalid_argument("socle multiplier of zero");
    const std::size_t n = z.vars();
    Field k = z.field();
    // grlex-largest key = last in the term map = a term of maximal |t|
    const auto& [texp, coef] = *z.terms().rbegin();
    std::uint64_t total = 0;
    for (auto e : texp) total += e;
    Scalar lambda = (total % 2 == 0) ? coef : -coef;

    // verify the claim x^t z = lambda * 1bar by actually multiplying
    DiffOp xt = DiffOp::of_polynomial(Polynomial::monomial(Monomial(texp), Scalar::one(k)));
    QuotientElem image = left_act(xt, z, RationalPoint::origin(n, k));
    if (!(image == QuotientElem::one(n, k).scaled(lambda)) || lambda.is_zero()) {
        throw std::logic_error("socle multiplier failed its internal verification");
    }
    return SocleMultiplier{texp, lambda};
}

} // namespace dpd
