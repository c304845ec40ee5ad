#include "klpoly.hpp"

#include <stdexcept>

namespace flagmod {

IntPolynomial::IntPolynomial(long long constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPolynomial IntPolynomial::monomial(long long coeff, int degree) {
    IntPolynomial p;
    if (coeff != 0) {
        p.c_.assign(degree + 1, 0);
        p.c_[degree] = coeff;
    }
    return p;
}

long long IntPolynomial::eval_at_one() const {
    long long s = 0;
    for (long long c : c_) s += c;
    return s;
}

IntPolynomial IntPolynomial::add(const IntPolynomial& o) const {
    IntPolynomial out;
    out.c_.assign(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = coeff(i) + o.coeff(i);
    out.trim();
    return out;
}

IntPolynomial IntPolynomial::sub(const IntPolynomial& o) const { return add(o.scale(-1)); }

IntPolynomial IntPolynomial::shift(int k) const {
    if (is_zero()) return {};
    IntPolynomial out;
    out.c_.assign(c_.size() + k, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i + k] = c_[i];
    return out;
}

IntPolynomial IntPolynomial::scale(long long a) const {
    IntPolynomial out = *this;
    for (auto& c : out.c_) c *= a;
    out.trim();
    return out;
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        long long c = coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        long long a = c > 0 ? c : -c;
        if (k == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a);
            out += "q";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string IntPolynomial::coeff_list() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        if (k) out += ";";
        out += std::to_string(coeff(k));
    }
    return out;
}

KlTable::KlTable(CoxeterPtr sys) : sys_(std::move(sys)) {
    const int n = sys_->order();
    table_.assign(static_cast<std::size_t>(n) * n, IntPolynomial());
    auto at = [&](ElemId w, ElemId y) -> IntPolynomial& {
        return table_[static_cast<std::size_t>(w) * n + y];
    };
    const IntPolynomial one(1);
    at(0, 0) = one;
    // ids are sorted by length, so w ascending respects the recursion
    for (ElemId w = 1; w < n; ++w) {
        int s = sys_->word(w)[0];  // s w < w
        ElemId v = sys_->mult_simple_left(s, w);
        // correction terms depend on (s, v) only
        struct Term {
            ElemId z;
            long long m;
            int shift;
        };
        std::vector<Term> terms;
        for (ElemId z = 0; z < n; ++z) {
            if (!sys_->bruhat_leq(z, v)) continue;
            if (sys_->length(sys_->mult_simple_left(s, z)) > sys_->length(z)) continue;
            long long m = mu(z, v);
            if (m != 0) terms.push_back({z, m, (sys_->length(w) - sys_->length(z)) / 2});
        }
        // y descending by length handles the s y > y case within the same w
        for (ElemId y = n - 1; y >= 0; --y) {
            if (!sys_->bruhat_leq(y, w)) continue;
            if (y == w) {
                at(w, y) = one;
                continue;
            }
            ElemId sy = sys_->mult_simple_left(s, y);
            if (sys_->length(sy) > sys_->length(y)) {
                at(w, y) = at(w, sy);
                continue;
            }
            // P_{y,w} = P_{sy,v} + q P_{y,v} - sum mu(z,v) q^((l(w)-l(z))/2) P_{y,z}
            IntPolynomial p = at(v, sy).add(at(v, y).shift(1));
            for (const Term& t : terms) {
                if (!sys_->bruhat_leq(y, t.z)) continue;
                p = p.sub(at(t.z, y).scale(t.m).shift(t.shift));
            }
            at(w, y) = p;
            // degree bound: deg P_{y,w} <= (l(w)-l(y)-1)/2
            if (2 * p.degree() > sys_->length(w) - sys_->length(y) - 1)
                throw std::logic_error("KL degree bound violated");
        }
    }
}

const IntPolynomial& KlTable::polynomial(ElemId y, ElemId w) const {
    if (!sys_->bruhat_leq(y, w)) return zero_;
    return table_[static_cast<std::size_t>(w) * sys_->order() + y];
}

long long KlTable::mu(ElemId y, ElemId w) const {
    int d = sys_->length(w) - sys_->length(y);
    if (d <= 0 || d % 2 == 0) return 0;
    return polynomial(y, w).coeff((d - 1) / 2);
}

void GroupAlgebraVector::add_term(ElemId w, const Scalar& c) {
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        if (!field->is_zero(c)) coeffs.emplace(w, c);
        return;
    }
    it->second = field->add(it->second, c);
    if (field->is_zero(it->second)) coeffs.erase(it);
}

bool GroupAlgebraVector::equals(const GroupAlgebraVector& o) const {
    if (coeffs.size() != o.coeffs.size()) return false;
    for (const auto& [w, c] : coeffs) {
        auto it = o.coeffs.find(w);
        if (it == o.coeffs.end() || !field->eq(c, it->second)) return false;
    }
    return true;
}

GroupAlgebraVector GroupAlgebraVector::add(const GroupAlgebraVector& o) const {
    GroupAlgebraVector out = *this;
    for (const auto& [w, c] : o.coeffs) out.add_term(w, c);
    return out;
}

GroupAlgebraVector GroupAlgebraVector::scale(const Scalar& c) const {
    GroupAlgebraVector out{sys, field, {}};
    if (field->is_zero(c)) return out;
    for (const auto& [w, a] : coeffs) out.coeffs.emplace(w, field->mul(c, a));
    return out;
}

GroupAlgebraVector GroupAlgebraVector::left_translate(ElemId g) const {
    GroupAlgebraVector out{sys, field, {}};
    for (const auto& [w, c] : coeffs) out.add_term(sys->mult(g, w), c);
    return out;
}

Vec GroupAlgebraVector::dense() const {
    Vec v = zero_vec(field, sys->order());
    for (const auto& [w, c] : coeffs) v[w] = c;
    return v;
}

std::string GroupAlgebraVector::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : coeffs) {
        if (!out.empty()) out += " + ";
        out += "(" + field->to_string(c) + ")*" + sys->word_string(w);
    }
    return out;
}

GroupAlgebraVector c_element(const KlTable& kl, ElemId w, const FieldPtr& field) {
    const CoxeterPtr& sys = kl.system();
    GroupAlgebraVector out{sys, field, {}};
    for (ElemId y = 0; y < sys->order(); ++y) {
        if (!sys->bruhat_leq(y, w)) continue;
        long long value = kl.polynomial(y, w).eval_at_one();
        if ((sys->length(w) - sys->length(y)) % 2 != 0) value = -value;
        out.add_term(y, field->from_int(value));
    }
    return out;
}

GroupAlgebraVector eta_element(const CoxeterPtr& sys, SubsetJ j, const FieldPtr& field) {
    GroupAlgebraVector out{sys, field, {}};
    for (ElemId w : sys->parabolic_elements(j))
        out.add_term(w, field->from_int(sys->length(w) % 2 == 0 ? 1 : -1));
    return out;
}

}  // namespace flagmod
