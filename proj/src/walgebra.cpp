#include "walgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagmod {

void EModelVector::add_term(ElemId w, const Scalar& c) {
    if (!model->in_basis(w)) throw std::invalid_argument("element is not in Y_J");
    auto it = coords.find(w);
    if (it == coords.end()) {
        if (!field->is_zero(c)) coords.emplace(w, c);
        return;
    }
    it->second = field->add(it->second, c);
    if (field->is_zero(it->second)) coords.erase(it);
}

Scalar EModelVector::coeff(ElemId w) const {
    auto it = coords.find(w);
    return it == coords.end() ? field->zero() : it->second;
}

bool EModelVector::equals(const EModelVector& o) const {
    if (coords.size() != o.coords.size()) return false;
    for (const auto& [w, c] : coords) {
        auto it = o.coords.find(w);
        if (it == o.coords.end() || !field->eq(c, it->second)) return false;
    }
    return true;
}

EModelVector EModelVector::scale(const Scalar& c) const {
    EModelVector out{model, field, {}};
    if (field->is_zero(c)) return out;
    for (const auto& [w, a] : coords) out.coords.emplace(w, field->mul(c, a));
    return out;
}

std::string EModelVector::to_string() const {
    if (coords.empty()) return "0";
    std::string out;
    const auto& sys = *model->system();
    for (const auto& [w, c] : coords) {
        if (!out.empty()) out += " + ";
        out += "(" + field->to_string(c) + ")*[" + sys.word_string(w) + "]D";
    }
    return out;
}

EModelPtr EModel::create(CoxeterPtr sys, SubsetJ j) {
    auto m = std::shared_ptr<EModel>(new EModel());
    m->sys_ = std::move(sys);
    m->j_ = j;
    m->wj_ = m->sys_->longest_element(j);
    m->y_ = m->sys_->y_set(j);
    for (std::size_t k = 0; k < m->y_.size(); ++k) m->pos_.emplace(m->y_[k], static_cast<int>(k));
    const int f = m->sys_->rank();
    m->cases_.assign(m->y_.size() * f, TauCase::kAnnihilate);
    for (std::size_t k = 0; k < m->y_.size(); ++k) {
        ElemId w = m->y_[k];
        ElemId wwj = m->sys_->mult(w, m->wj_);
        for (int i = 0; i < f; ++i) {
            ElemId sw = m->sys_->mult_simple_left(i, w);
            if (m->sys_->length(sw) < m->sys_->length(w)) {
                if (!m->pos_.count(sw))
                    throw std::logic_error("s_i w left Y_J in the reflect case");
                m->cases_[k * f + i] = TauCase::kReflect;
            } else if (m->sys_->is_left_descent(i, wwj)) {
                m->cases_[k * f + i] = TauCase::kFix;
            } else {
                m->cases_[k * f + i] = TauCase::kAnnihilate;
            }
        }
    }
    return m;
}

bool EModel::in_basis(ElemId w) const { return pos_.count(w) != 0; }

TauCase EModel::tau_case(int i, ElemId w) const {
    if (i < 0 || i >= sys_->rank()) throw std::out_of_range("simple index out of range");
    auto it = pos_.find(w);
    if (it == pos_.end()) throw std::invalid_argument("element is not in Y_J");
    return cases_[static_cast<std::size_t>(it->second) * sys_->rank() + i];
}

EModelVector EModel::zero(FieldPtr field) const {
    return EModelVector{shared_from_this_(), std::move(field), {}};
}

EModelVector EModel::unit(FieldPtr field, ElemId w) const {
    EModelVector v = zero(std::move(field));
    v.add_term(w, v.field->one());
    return v;
}

EModelVector EModel::generator(FieldPtr field) const {
    return unit(std::move(field), sys_->identity());
}

EModelVector tau_apply(int i, const EModelVector& v) {
    const EModel& m = *v.model;
    EModelVector out{v.model, v.field, {}};
    for (const auto& [w, c] : v.coords) {
        switch (m.tau_case(i, w)) {
            case TauCase::kReflect: {
                out.add_term(w, c);
                ElemId sw = m.system()->mult_simple_left(i, w);
                out.add_term(sw, v.field->neg(c));
                break;
            }
            case TauCase::kFix:
                out.add_term(w, c);
                break;
            case TauCase::kAnnihilate:
                break;
        }
    }
    return out;
}

PsiMeasure psi(const EModelVector& v) {
    if (v.is_zero()) throw std::invalid_argument("Psi of the zero vector");
    const auto& sys = *v.model->system();
    PsiMeasure out{0, 0};
    for (const auto& [w, c] : v.coords) {
        int l = sys.length(w);
        if (l > out.h) {
            out.h = l;
            out.c = 1;
        } else if (l == out.h) {
            ++out.c;
        }
    }
    return out;
}

Scalar kappa(const EModelPtr& model, const FieldPtr& field, ElemId w1,
             const std::vector<int>& taus, ElemId w2) {
    if (!model->in_basis(w1) || !model->in_basis(w2))
        throw std::invalid_argument("element is not in Y_J");
    EModelVector v = model->unit(field, w2);
    for (int i : taus) v = tau_apply(i, v);
    return v.coeff(w1);
}

namespace {

// lexicographically next size-l combination of {0..t-1}; false when exhausted
bool next_combination(std::vector<int>& c, int t) {
    int l = static_cast<int>(c.size());
    for (int i = l - 1; i >= 0; --i) {
        if (c[i] < t - (l - i)) {
            ++c[i];
            for (int k = i + 1; k < l; ++k) c[k] = c[k - 1] + 1;
            return true;
        }
    }
    return false;
}

// the ShortLex-least element among same-length candidates
ElemId word_least(const CoxeterSystem& sys, const std::vector<ElemId>& cands) {
    ElemId best = cands.front();
    for (ElemId w : cands)
        if (sys.word(w) < sys.word(best)) best = w;
    return best;
}

}  // namespace

ReductionCertificate reduce_to_generator(const EModelVector& input) {
    if (input.is_zero()) throw std::invalid_argument("cannot reduce the zero vector");
    const EModel& model = *input.model;
    const CoxeterSystem& sys = *model.system();
    const FieldPtr& field = input.field;

    ReductionCertificate cert;
    cert.j = model.j();
    EModelVector a = input;
    cert.trace.push_back(psi(a));

    const long budget = 10LL * sys.order() * sys.order();
    long applied = 0;
    auto apply_tau = [&](int idx, ReduceStepKind kind) {
        PsiMeasure before = psi(a);
        a = tau_apply(idx, a);
        if (++applied > budget)
            throw std::runtime_error("reduction exceeded its step budget; giving up");
        if (a.is_zero()) throw std::logic_error("reduction step annihilated the vector");
        PsiMeasure after = psi(a);
        if (before < after) throw std::logic_error("Psi increased under a tau step");
        cert.steps.push_back(idx);
        cert.kinds.push_back(kind);
        cert.trace.push_back(after);
    };

    while (psi(a) > PsiMeasure{0, 1}) {
        PsiMeasure measure = psi(a);
        std::vector<ElemId> tops;
        for (const auto& [w, c] : a.coords)
            if (sys.length(w) == measure.h) tops.push_back(w);
        ElemId w = word_least(sys, tops);
        const auto& word = sys.word(w);
        const int t = static_cast<int>(word.size());

        ElemId wwj = sys.mult(w, model.w_j());
        SubsetJ k_set = sys.support(wwj) | model.j();
        int j_idx = -1;
        for (int i = 0; i < sys.rank(); ++i)
            if ((k_set & (SubsetJ(1) << i)) && !sys.is_left_descent(i, wwj)) {
                j_idx = i;
                break;
            }
        if (j_idx < 0) throw std::logic_error("no ascent found in the minimal parabolic");

        // minimal t' with s_j s_{i_t'} ... s_{i_1} w w_J < s_{i_t'} ... s_{i_1} w w_J
        int tprime = -1;
        ElemId z = wwj, stripped = w;
        for (int k = 1; k <= t; ++k) {
            z = sys.mult_simple_left(word[k - 1], z);
            stripped = sys.mult_simple_left(word[k - 1], stripped);
            if (sys.is_left_descent(j_idx, z)) {
                tprime = k;
                break;
            }
        }
        if (tprime < 0) throw std::logic_error("no descent point along the reduced word");
        ElemId w1 = stripped;
        if (!model.in_basis(w1)) throw std::logic_error("w1 left Y_J");

        if (!field->is_zero(a.coeff(w1))) {
            apply_tau(j_idx, ReduceStepKind::kKill);
            if (!(cert.trace[cert.trace.size() - 1] < cert.trace[cert.trace.size() - 2]))
                throw std::logic_error("kill step did not decrease Psi");
            continue;
        }

        // transport: minimal l and lexicographically least index subset of
        // {1..t'} lifting w1 to a support element w2 with l(w2) = l(w1) + l
        int l_found = -1;
        std::vector<int> subset;
        ElemId w2 = -1;
        for (int l = 1; l <= tprime && l_found < 0; ++l) {
            std::vector<int> comb(l);
            for (int i = 0; i < l; ++i) comb[i] = i;  // 0-based positions into word
            do {
                ElemId cand = w1;
                for (int i = l - 1; i >= 0; --i)
                    cand = sys.mult_simple_left(word[comb[i]], cand);
                if (sys.length(cand) == sys.length(w1) + l && model.in_basis(cand) &&
                    !field->is_zero(a.coeff(cand))) {
                    l_found = l;
                    subset = comb;
                    w2 = cand;
                    break;
                }
            } while (next_combination(comb, tprime));
        }
        if (l_found < 0) throw std::logic_error("no lift found below the chosen element");

        Scalar a_w2 = a.coeff(w2);
        PsiMeasure before = psi(a);
        for (int i = 0; i < l_found; ++i)
            apply_tau(word[subset[i]], ReduceStepKind::kTransport);
        // the target coefficient must now be (-1)^l a_{w2}
        Scalar expected = l_found % 2 == 0 ? a_w2 : field->neg(a_w2);
        if (!field->eq(a.coeff(w1), expected))
            throw std::logic_error("transport produced an unexpected coefficient");
        if (psi(a) == before) {
            if (field->is_zero(a.coeff(w)))
                throw std::logic_error("top coefficient vanished with Psi unchanged");
            apply_tau(j_idx, ReduceStepKind::kKill);
            if (!(psi(a) < before)) throw std::logic_error("kill step did not decrease Psi");
        }
    }

    cert.final_scalar = a.coeff(sys.identity());
    if (field->is_zero(cert.final_scalar))
        throw std::logic_error("reduction terminated with a zero scalar");
    return cert;
}

bool replay_certificate(const ReductionCertificate& cert, const EModelVector& input,
                        std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (input.is_zero()) return fail("input is zero");
    if (cert.steps.size() != cert.kinds.size() || cert.trace.size() != cert.steps.size() + 1)
        return fail("malformed certificate");
    EModelVector a = input;
    if (psi(a) != cert.trace[0]) return fail("initial Psi mismatch");
    for (std::size_t k = 0; k < cert.steps.size(); ++k) {
        a = tau_apply(cert.steps[k], a);
        if (a.is_zero()) return fail("replay reached zero");
        if (psi(a) != cert.trace[k + 1]) return fail("trace mismatch");
        if (cert.trace[k + 1] > cert.trace[k]) return fail("Psi increased");
        if (cert.kinds[k] == ReduceStepKind::kKill && !(cert.trace[k + 1] < cert.trace[k]))
            return fail("kill step did not strictly decrease Psi");
    }
    if (psi(a) != (PsiMeasure{0, 1})) return fail("did not terminate at the generator line");
    if (input.field->is_zero(cert.final_scalar)) return fail("zero final scalar");
    EModelVector target = input.model->generator(input.field).scale(cert.final_scalar);
    if (!a.equals(target)) return fail("final vector is not final_scalar * D_J");
    return true;
}

EModelVector random_vector(const EModelPtr& model, const FieldPtr& field,
                           std::mt19937_64& rng) {
    EModelVector v{model, field, {}};
    while (v.is_zero()) {
        for (ElemId w : model->basis()) {
            // keep the support density moderate
            if (rng() % 3 == 0) continue;
            Scalar c;
            if (field->is_rational()) {
                std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
                std::int64_t den = static_cast<std::int64_t>(rng() % 9) + 1;
                c = field->from_ratio(num, den);
            } else {
                c = field->from_int(static_cast<std::int64_t>(rng() % field->size()));
            }
            v.add_term(w, c);
        }
    }
    return v;
}

std::vector<GroupAlgebraVector> c_ideal_basis(const KlTable& kl, SubsetJ j, int variant,
                                              const FieldPtr& field) {
    if (variant < 1 || variant > 3) throw std::invalid_argument("variant must be 1, 2 or 3");
    const CoxeterPtr& sys = kl.system();
    ElemId wj = sys->longest_element(j);
    GroupAlgebraVector cwj = c_element(kl, wj, field);
    std::vector<ElemId> xj = sys->min_coset_reps(j);
    std::vector<GroupAlgebraVector> out;
    if (variant == 1) {
        for (ElemId x : xj) out.push_back(cwj.left_translate(x));
    } else if (variant == 2) {
        for (ElemId x : xj) out.push_back(c_element(kl, sys->mult(x, wj), field));
    } else {
        std::vector<ElemId> yj = sys->y_set(j);
        std::vector<bool> in_y(sys->order(), false);
        for (ElemId y : yj) in_y[y] = true;
        for (ElemId y : yj) out.push_back(cwj.left_translate(y));
        for (ElemId x : xj)
            if (!in_y[x]) out.push_back(c_element(kl, sys->mult(x, wj), field));
    }
    return out;
}

}  // namespace flagmod
