#ifndef FLAGMOD_KLPOLY_HPP
#define FLAGMOD_KLPOLY_HPP

// Kazhdan-Lusztig polynomials P_{y,w} and the specialized basis elements
// C_w = sum_{y <= w} (-1)^(l(w)-l(y)) P_{y,w}(1) y of the group algebra.
//
// The table is computed once per system by the mu-coefficient recursion,
// walking w by increasing length; mu values are read off the stored
// polynomials (coefficient of the top allowed degree), never kept separately.

#include <map>

#include "coxeter.hpp"
#include "exactlinalg.hpp"

namespace flagmod {

// Integer polynomial in q, dense coefficients, constant term first. The zero
// polynomial is the empty vector; otherwise the leading coefficient is
// nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(long long constant);
    static IntPolynomial monomial(long long coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
    }
    long long eval_at_one() const;

    IntPolynomial add(const IntPolynomial& o) const;
    IntPolynomial sub(const IntPolynomial& o) const;
    IntPolynomial shift(int k) const;  // multiply by q^k
    IntPolynomial scale(long long a) const;
    bool equals(const IntPolynomial& o) const { return c_ == o.c_; }

    std::string to_string() const;        // "1+q", "1+2q+q^3"
    std::string coeff_list() const;       // "1;0;2" constant first
    const std::vector<long long>& coeffs() const { return c_; }

private:
    void trim();
    std::vector<long long> c_;
};

class KlTable {
public:
    explicit KlTable(CoxeterPtr sys);

    const CoxeterPtr& system() const { return sys_; }
    // P_{y,w}; the zero polynomial when y is not below w.
    const IntPolynomial& polynomial(ElemId y, ElemId w) const;
    // Coefficient of q^((l(w)-l(y)-1)/2) in P_{y,w}, zero unless y < w with
    // odd length difference.
    long long mu(ElemId y, ElemId w) const;

private:
    CoxeterPtr sys_;
    std::vector<IntPolynomial> table_;  // order * order, row w, col y
    IntPolynomial zero_;
};

// Sparse element of the group algebra kW over an exact field.
struct GroupAlgebraVector {
    CoxeterPtr sys;
    FieldPtr field;
    std::map<ElemId, Scalar> coeffs;

    void add_term(ElemId w, const Scalar& c);
    bool is_zero() const { return coeffs.empty(); }
    bool equals(const GroupAlgebraVector& o) const;
    GroupAlgebraVector add(const GroupAlgebraVector& o) const;
    GroupAlgebraVector scale(const Scalar& c) const;
    // g . v: translate the support on the left.
    GroupAlgebraVector left_translate(ElemId g) const;
    Vec dense() const;  // coordinates over all of W, by element id
    std::string to_string() const;
};

GroupAlgebraVector c_element(const KlTable& kl, ElemId w, const FieldPtr& field);
GroupAlgebraVector eta_element(const CoxeterPtr& sys, SubsetJ j, const FieldPtr& field);

}  // namespace flagmod

#endif
