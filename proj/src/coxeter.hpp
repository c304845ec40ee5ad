#ifndef FLAGMOD_COXETER_HPP
#define FLAGMOD_COXETER_HPP

// Finite crystallographic Coxeter systems built from Cartan data.
//
// Elements are represented by their action on the positive roots (a signed
// permutation), which makes equality canonical and length a popcount. The
// whole group is enumerated at construction and elements are addressed by
// dense ids ordered by (length, lexicographic action); that order is the
// contract for every function returning element lists. All tables, including
// Bruhat order, are precomputed, so a system is immutable and safe for
// concurrent reads.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace flagmod {

using ElemId = int;
// Subset of the simple-reflection index set I, one bit per index.
using SubsetJ = std::uint32_t;

std::string subset_to_string(SubsetJ j);
SubsetJ parse_subset(const std::string& text, int rank);

class CoxeterSystem;
using CoxeterPtr = std::shared_ptr<const CoxeterSystem>;

class CoxeterSystem {
public:
    // Labels: A1..A6, B2..B4, C2..C4, D4, F4, G2. The builder itself is
    // generic over Cartan matrices.
    static CoxeterPtr build(const std::string& type_label);
    static CoxeterPtr build_from_cartan(std::string label,
                                        std::vector<std::vector<int>> cartan);

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    int order() const { return static_cast<int>(length_.size()); }
    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
    SubsetJ full_subset() const { return (SubsetJ(1) << rank_) - 1; }

    ElemId identity() const { return 0; }
    ElemId simple(int i) const;
    int length(ElemId w) const { return length_[w]; }
    ElemId mult(ElemId w, ElemId v) const;       // w * v
    ElemId inverse(ElemId w) const { return inverse_[w]; }
    ElemId mult_simple_right(ElemId w, int i) const;  // w * s_i
    ElemId mult_simple_left(int i, ElemId w) const;   // s_i * w

    SubsetJ right_descents(ElemId w) const;
    SubsetJ left_descents(ElemId w) const;
    bool is_right_descent(ElemId w, int i) const;
    bool is_left_descent(int i, ElemId w) const;

    bool bruhat_leq(ElemId y, ElemId w) const;

    // Longest element of the standard parabolic W_J.
    ElemId longest_element(SubsetJ j) const;
    ElemId longest_element() const { return longest_element(full_subset()); }

    // X_J: minimal-length coset representatives of W / W_J, ordered by
    // (length, lexicographic action).
    std::vector<ElemId> min_coset_reps(SubsetJ j) const;
    // Y_J = { x in X_J | R(x w_J) = J }.
    std::vector<ElemId> y_set(SubsetJ j) const;
    // All elements of W_J, ordered.
    std::vector<ElemId> parabolic_elements(SubsetJ j) const;

    long long count_involutions() const;

    // ShortLex-minimal reduced word, as simple indices.
    const std::vector<std::uint8_t>& word(ElemId w) const { return words_[w]; }
    // Simple indices occurring in a reduced word (word-independent).
    SubsetJ support(ElemId w) const { return supports_[w]; }

    std::string word_string(ElemId w) const;  // "s0*s1*s0", "e"
    ElemId parse_word(const std::string& text) const;

    // Image of positive root k under w: pair (root index, negated?).
    std::pair<int, bool> root_image(ElemId w, int root) const;
    // Positive root as coefficients over the simple roots.
    const std::vector<int>& positive_root(int k) const { return pos_roots_[k]; }
    int simple_root_index(int i) const { return simple_root_idx_[i]; }

    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

private:
    CoxeterSystem() = default;
    void enumerate();
    std::vector<std::int32_t> compose(const std::vector<std::int32_t>& outer,
                                      const std::vector<std::int32_t>& inner) const;

    std::string label_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> pos_roots_;   // sorted by (height, lex)
    std::vector<int> simple_root_idx_;          // index of alpha_i in pos_roots_
    std::vector<std::vector<std::int32_t>> simple_action_;  // per simple index

    // Per-element tables, indexed by id.
    std::vector<std::vector<std::int32_t>> action_;
    std::vector<int> length_;
    std::vector<ElemId> inverse_;
    std::vector<ElemId> right_mult_;  // order * rank
    std::vector<ElemId> left_mult_;   // order * rank
    std::vector<std::vector<std::uint8_t>> words_;
    std::vector<SubsetJ> supports_;
    std::vector<std::uint8_t> bruhat_;  // order * order, row = w, col = y

    static constexpr int kMaxOrder = 10000;
};

}  // namespace flagmod

#endif
