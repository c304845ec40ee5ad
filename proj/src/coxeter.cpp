#include "coxeter.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flagmod {

std::string subset_to_string(SubsetJ j) {
    std::string out = "[";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (j & (SubsetJ(1) << i)) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
    return out + "]";
}

SubsetJ parse_subset(const std::string& text, int rank) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](char c) { return c == '[' || c == ']' || c == ' '; }),
            t.end());
    SubsetJ j = 0;
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        int i = std::stoi(tok);
        if (i < 0 || i >= rank) throw std::invalid_argument("subset index out of range: " + tok);
        j |= SubsetJ(1) << i;
    }
    return j;
}

namespace {

std::vector<std::vector<int>> cartan_for(const std::string& type, int n) {
    auto chain = [&](int rank) {
        std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
        for (int i = 0; i < rank; ++i) a[i][i] = 2;
        for (int i = 0; i + 1 < rank; ++i) a[i][i + 1] = a[i + 1][i] = -1;
        return a;
    };
    if (type == "A" && n >= 1) return chain(n);
    if (type == "B" && n >= 2) {
        auto a = chain(n);
        a[n - 1][n - 2] = -2;
        return a;
    }
    if (type == "C" && n >= 2) {
        auto a = chain(n);
        a[n - 2][n - 1] = -2;
        return a;
    }
    if (type == "D" && n >= 4) {
        auto a = chain(n - 1);
        for (auto& row : a) row.push_back(0);
        a.push_back(std::vector<int>(n, 0));
        a[n - 1][n - 1] = 2;
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1;
        return a;
    }
    if (type == "G" && n == 2) return {{2, -1}, {-3, 2}};
    if (type == "F" && n == 4)
        return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    throw std::invalid_argument("unknown Coxeter type label");
}

}  // namespace

CoxeterPtr CoxeterSystem::build(const std::string& type_label) {
    if (type_label.size() < 2) throw std::invalid_argument("unknown Coxeter type label");
    std::string family = type_label.substr(0, 1);
    int n = 0;
    try {
        n = std::stoi(type_label.substr(1));
    } catch (...) {
        throw std::invalid_argument("unknown Coxeter type label");
    }
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (n > 8) throw std::invalid_argument("rank too large");
    return build_from_cartan(type_label, cartan_for(family, n));
}

CoxeterPtr CoxeterSystem::build_from_cartan(std::string label,
                                            std::vector<std::vector<int>> cartan) {
    int rank = static_cast<int>(cartan.size());
    if (rank == 0) throw std::invalid_argument("rank must be positive");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(cartan[i].size()) != rank)
            throw std::invalid_argument("Cartan matrix is not square");
        if (cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        for (int j = 0; j < rank; ++j) {
            if (i != j && cartan[i][j] > 0)
                throw std::invalid_argument("Cartan off-diagonal must be non-positive");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw std::invalid_argument("Cartan zero pattern must be symmetric");
        }
    }
    auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
    sys->label_ = std::move(label);
    sys->rank_ = rank;
    sys->cartan_ = std::move(cartan);
    sys->enumerate();
    return sys;
}

void CoxeterSystem::enumerate() {
    const int f = rank_;

    // --- positive roots, closed under the simple reflections ---
    auto reflect = [&](int i, const std::vector<int>& v) {
        int pairing = 0;
        for (int j = 0; j < f; ++j) pairing += cartan_[i][j] * v[j];
        std::vector<int> out = v;
        out[i] -= pairing;
        return out;
    };
    std::map<std::vector<int>, int> root_set;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < f; ++i) {
        std::vector<int> alpha(f, 0);
        alpha[i] = 1;
        root_set.emplace(alpha, 0);
        queue.push_back(alpha);
    }
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (int i = 0; i < f; ++i) {
            auto u = reflect(i, v);
            bool positive = true;
            for (int c : u) positive = positive && c >= 0;
            if (positive && !root_set.count(u)) {
                root_set.emplace(u, 0);
                queue.push_back(u);
                if (root_set.size() > 4096)
                    throw std::invalid_argument("root system is not finite");
            }
        }
    }
    pos_roots_.assign(root_set.size(), {});
    {
        std::vector<std::vector<int>> roots;
        for (const auto& [v, _] : root_set) roots.push_back(v);
        auto height = [](const std::vector<int>& v) {
            int h = 0;
            for (int c : v) h += c;
            return h;
        };
        std::sort(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
            if (height(a) != height(b)) return height(a) < height(b);
            return a < b;
        });
        pos_roots_ = roots;
    }
    const int nroots = static_cast<int>(pos_roots_.size());
    std::map<std::vector<int>, int> root_index;
    for (int k = 0; k < nroots; ++k) root_index[pos_roots_[k]] = k;
    simple_root_idx_.assign(f, -1);
    for (int i = 0; i < f; ++i) {
        std::vector<int> alpha(f, 0);
        alpha[i] = 1;
        simple_root_idx_[i] = root_index.at(alpha);
    }

    // --- signed action of each simple reflection on the positive roots ---
    simple_action_.assign(f, std::vector<std::int32_t>(nroots, 0));
    for (int i = 0; i < f; ++i)
        for (int k = 0; k < nroots; ++k) {
            auto u = reflect(i, pos_roots_[k]);
            bool positive = true;
            for (int c : u) positive = positive && c >= 0;
            if (positive) {
                simple_action_[i][k] = root_index.at(u) + 1;
            } else {
                for (int& c : u) c = -c;
                simple_action_[i][k] = -(root_index.at(u) + 1);
            }
        }

    // --- enumerate the group by closure under right multiplication ---
    std::vector<std::int32_t> id_action(nroots);
    for (int k = 0; k < nroots; ++k) id_action[k] = k + 1;
    std::map<std::vector<std::int32_t>, int> seen;
    std::vector<std::vector<std::int32_t>> elems{id_action};
    seen.emplace(id_action, 0);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        auto w = elems[head];
        for (int i = 0; i < f; ++i) {
            // w * s_i acts by w after s_i
            auto ws = compose(w, simple_action_[i]);
            if (!seen.count(ws)) {
                seen.emplace(ws, 0);
                elems.push_back(ws);
                if (elems.size() > kMaxOrder)
                    throw std::invalid_argument("group too large to enumerate");
            }
        }
    }
    auto len_of = [](const std::vector<std::int32_t>& a) {
        int l = 0;
        for (auto v : a) l += v < 0;
        return l;
    };
    std::sort(elems.begin(), elems.end(), [&](const auto& a, const auto& b) {
        int la = len_of(a), lb = len_of(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    const int order = static_cast<int>(elems.size());
    action_ = std::move(elems);
    std::map<std::vector<std::int32_t>, ElemId> index;
    for (int w = 0; w < order; ++w) index.emplace(action_[w], w);

    length_.resize(order);
    for (int w = 0; w < order; ++w) length_[w] = len_of(action_[w]);

    right_mult_.assign(static_cast<std::size_t>(order) * f, -1);
    left_mult_.assign(static_cast<std::size_t>(order) * f, -1);
    for (int w = 0; w < order; ++w)
        for (int i = 0; i < f; ++i) {
            right_mult_[static_cast<std::size_t>(w) * f + i] =
                index.at(compose(action_[w], simple_action_[i]));
            left_mult_[static_cast<std::size_t>(w) * f + i] =
                index.at(compose(simple_action_[i], action_[w]));
        }

    inverse_.resize(order);
    for (int w = 0; w < order; ++w) {
        std::vector<std::int32_t> inv(nroots, 0);
        for (int k = 0; k < nroots; ++k) {
            std::int32_t img = action_[w][k];
            if (img > 0)
                inv[img - 1] = k + 1;
            else
                inv[-img - 1] = -(k + 1);
        }
        inverse_[w] = index.at(inv);
    }

    // --- ShortLex words and supports ---
    words_.resize(order);
    supports_.assign(order, 0);
    for (int w = 0; w < order; ++w) {
        // elements are sorted by length, so prefixes are already done
        if (length_[w] == 0) continue;
        for (int i = 0; i < f; ++i) {
            ElemId sw = left_mult_[static_cast<std::size_t>(w) * f + i];
            if (length_[sw] < length_[w]) {
                words_[w] = words_[sw];
                words_[w].insert(words_[w].begin(), static_cast<std::uint8_t>(i));
                supports_[w] = supports_[sw] | (SubsetJ(1) << i);
                break;
            }
        }
    }

    // --- Bruhat order, by the descent recursion ---
    bruhat_.assign(static_cast<std::size_t>(order) * order, 0);
    bruhat_[0] = 1;  // e <= e
    for (int w = 1; w < order; ++w) {
        int s = words_[w][0];  // smallest left descent
        ElemId v = left_mult_[static_cast<std::size_t>(w) * rank_ + s];
        auto* roww = &bruhat_[static_cast<std::size_t>(w) * order];
        const auto* rowv = &bruhat_[static_cast<std::size_t>(v) * order];
        for (int y = 0; y < order; ++y) {
            ElemId sy = left_mult_[static_cast<std::size_t>(y) * rank_ + s];
            roww[y] = (length_[sy] < length_[y]) ? rowv[sy] : rowv[y];
        }
    }
}

std::vector<std::int32_t> CoxeterSystem::compose(const std::vector<std::int32_t>& outer,
                                                 const std::vector<std::int32_t>& inner) const {
    std::vector<std::int32_t> out(inner.size());
    for (std::size_t k = 0; k < inner.size(); ++k) {
        std::int32_t m = inner[k];
        std::int32_t r = outer[(m > 0 ? m : -m) - 1];
        out[k] = m > 0 ? r : -r;
    }
    return out;
}

ElemId CoxeterSystem::simple(int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple index out of range");
    return left_mult_[static_cast<std::size_t>(identity()) * rank_ + i];
}

ElemId CoxeterSystem::mult(ElemId w, ElemId v) const {
    // compose along the ShortLex word of v
    ElemId out = w;
    for (int i : words_[v]) out = mult_simple_right(out, i);
    return out;
}

ElemId CoxeterSystem::mult_simple_right(ElemId w, int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple index out of range");
    return right_mult_[static_cast<std::size_t>(w) * rank_ + i];
}

ElemId CoxeterSystem::mult_simple_left(int i, ElemId w) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple index out of range");
    return left_mult_[static_cast<std::size_t>(w) * rank_ + i];
}

SubsetJ CoxeterSystem::right_descents(ElemId w) const {
    SubsetJ r = 0;
    for (int i = 0; i < rank_; ++i)
        if (is_right_descent(w, i)) r |= SubsetJ(1) << i;
    return r;
}

SubsetJ CoxeterSystem::left_descents(ElemId w) const { return right_descents(inverse_[w]); }

bool CoxeterSystem::is_right_descent(ElemId w, int i) const {
    return action_[w][simple_root_idx_[i]] < 0;
}

bool CoxeterSystem::is_left_descent(int i, ElemId w) const {
    return is_right_descent(inverse_[w], i);
}

bool CoxeterSystem::bruhat_leq(ElemId y, ElemId w) const {
    return bruhat_[static_cast<std::size_t>(w) * order() + y] != 0;
}

ElemId CoxeterSystem::longest_element(SubsetJ j) const {
    ElemId w = identity();
    bool extended = true;
    while (extended) {
        extended = false;
        for (int i = 0; i < rank_; ++i) {
            if (!(j & (SubsetJ(1) << i))) continue;
            if (!is_right_descent(w, i)) {
                w = mult_simple_right(w, i);
                extended = true;
                break;
            }
        }
    }
    return w;
}

std::vector<ElemId> CoxeterSystem::min_coset_reps(SubsetJ j) const {
    std::vector<ElemId> out;
    for (ElemId w = 0; w < order(); ++w)
        if ((right_descents(w) & j) == 0) out.push_back(w);
    return out;
}

std::vector<ElemId> CoxeterSystem::y_set(SubsetJ j) const {
    ElemId wj = longest_element(j);
    std::vector<ElemId> out;
    for (ElemId x : min_coset_reps(j))
        if (right_descents(mult(x, wj)) == j) out.push_back(x);
    return out;
}

std::vector<ElemId> CoxeterSystem::parabolic_elements(SubsetJ j) const {
    std::vector<ElemId> out;
    for (ElemId w = 0; w < order(); ++w)
        if ((supports_[w] | j) == j) out.push_back(w);
    return out;
}

long long CoxeterSystem::count_involutions() const {
    long long n = 0;
    for (ElemId w = 0; w < order(); ++w)
        if (inverse_[w] == w) ++n;
    return n;
}

std::string CoxeterSystem::word_string(ElemId w) const {
    if (length_[w] == 0) return "e";
    std::string out;
    for (int i : words_[w]) {
        if (!out.empty()) out += "*";
        out += "s" + std::to_string(i);
    }
    return out;
}

ElemId CoxeterSystem::parse_word(const std::string& text) const {
    std::string t = text;
    t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
    if (t.empty() || t == "e" || t == "1") return identity();
    ElemId w = identity();
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, '*')) {
        if (tok.size() < 2 || tok[0] != 's')
            throw std::invalid_argument("malformed word: " + text);
        int i;
        try {
            i = std::stoi(tok.substr(1));
        } catch (...) {
            throw std::invalid_argument("malformed word: " + text);
        }
        if (i < 0 || i >= rank_) throw std::invalid_argument("generator out of range: " + tok);
        w = mult_simple_right(w, i);
    }
    return w;
}

std::pair<int, bool> CoxeterSystem::root_image(ElemId w, int root) const {
    std::int32_t v = action_[w][root];
    return v > 0 ? std::make_pair(v - 1, false) : std::make_pair(-v - 1, true);
}

}  // namespace flagmod
