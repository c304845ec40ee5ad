#ifndef FLAGMOD_WALGEBRA_HPP
#define FLAGMOD_WALGEBRA_HPP

// The W-level model of the module E'_J: the free module over an exact field
// with basis { w . D_J | w in Y_J }, the three-case tau_i operator action on
// it, coefficient extraction for iterated tau words, and the descent
// reduction algorithm that rewrites any nonzero vector to a scalar multiple
// of the generator D_J, emitting a replayable certificate.

#include <compare>
#include <memory>
#include <random>

#include "klpoly.hpp"

namespace flagmod {

// (max support length, number of support elements of that length), compared
// in dictionary order. Defined for nonzero vectors only.
struct PsiMeasure {
    int h = 0;
    int c = 1;
    auto operator<=>(const PsiMeasure&) const = default;
};

class EModel;
using EModelPtr = std::shared_ptr<const EModel>;

struct EModelVector {
    EModelPtr model;
    FieldPtr field;
    std::map<ElemId, Scalar> coords;  // keys restricted to Y_J

    void add_term(ElemId w, const Scalar& c);
    Scalar coeff(ElemId w) const;
    bool is_zero() const { return coords.empty(); }
    bool equals(const EModelVector& o) const;
    EModelVector scale(const Scalar& c) const;
    std::string to_string() const;
};

enum class TauCase {
    kReflect,     // s_i w < w:            w D_J -> w D_J - s_i w D_J
    kFix,         // s_i w w_J < w w_J, s_i w > w:  w D_J -> w D_J
    kAnnihilate,  // s_i w w_J > w w_J:    w D_J -> 0
};

enum class ReduceStepKind {
    kKill,       // tau_j annihilating the chosen top basis element; Psi drops
    kTransport,  // tau word moving a longer support element onto the target
};

struct ReductionCertificate {
    SubsetJ j = 0;
    std::vector<int> steps;               // simple indices, application order
    std::vector<ReduceStepKind> kinds;    // parallel to steps
    std::vector<PsiMeasure> trace;        // Psi before step k at index k; last = final
    Scalar final_scalar;
};

class EModel : public std::enable_shared_from_this<EModel> {
public:
    static EModelPtr create(CoxeterPtr sys, SubsetJ j);

    const CoxeterPtr& system() const { return sys_; }
    SubsetJ j() const { return j_; }
    ElemId w_j() const { return wj_; }
    const std::vector<ElemId>& basis() const { return y_; }  // Y_J, ordered
    bool in_basis(ElemId w) const;
    TauCase tau_case(int i, ElemId w) const;

    EModelVector zero(FieldPtr field) const;
    EModelVector unit(FieldPtr field, ElemId w) const;  // w D_J
    EModelVector generator(FieldPtr field) const;       // D_J

private:
    EModel() = default;
    CoxeterPtr sys_;
    SubsetJ j_ = 0;
    ElemId wj_ = 0;
    std::vector<ElemId> y_;
    std::map<ElemId, int> pos_;
    std::vector<TauCase> cases_;  // |Y_J| * rank
};

EModelVector tau_apply(int i, const EModelVector& v);

PsiMeasure psi(const EModelVector& v);  // throws on zero vectors

// Coefficient of w1 D_J in tau_{j_k} ... tau_{j_1} (w2 D_J), the word applied
// first-index-first.
Scalar kappa(const EModelPtr& model, const FieldPtr& field, ElemId w1,
             const std::vector<int>& taus, ElemId w2);

ReductionCertificate reduce_to_generator(const EModelVector& input);

// Re-applies the certificate's steps to the input and checks the trace, the
// strict Psi drop on every kill step, and the final scalar.
bool replay_certificate(const ReductionCertificate& cert, const EModelVector& input,
                        std::string* why = nullptr);

// Random nonzero vector with small coefficients, for fuzzing.
EModelVector random_vector(const EModelPtr& model, const FieldPtr& field,
                           std::mt19937_64& rng);

// The three bases of the left ideal kW C_{w_J}:
//   1: { w C_{w_J} | w in X_J }
//   2: { C_{x w_J} | x in X_J }
//   3: { w C_{w_J} | w in Y_J } then { C_{x w_J} | x in X_J \ Y_J }
std::vector<GroupAlgebraVector> c_ideal_basis(const KlTable& kl, SubsetJ j, int variant,
                                              const FieldPtr& field);

}  // namespace flagmod

#endif
