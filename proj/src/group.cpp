#include "fqg/group.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "fqg/util.hpp"

namespace fqg {

// ---------------------------------------------------------------------------
// permutations

Permutation Permutation::identity(int32_t n) {
    Permutation p;
    p.img.resize(n);
    for (int32_t i = 0; i < n; ++i) p.img[i] = i;
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    Permutation r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[i] = other.img[img[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int32_t>(i);
    return r;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
        if (img[i] != static_cast<int32_t>(i)) return false;
    return true;
}

std::string Permutation::cycle_notation() const {
    std::vector<bool> seen(img.size(), false);
    std::string out;
    for (size_t i = 0; i < img.size(); ++i) {
        if (seen[i] || img[i] == static_cast<int32_t>(i)) continue;
        out += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = img[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// polycyclic collection

void PcPresentation::validate() const {
    int n = ngens();
    if (static_cast<int>(power.size()) != n || static_cast<int>(conj.size()) != n)
        throw InvalidParameters("pc presentation: relation table shape mismatch");
    auto check_word = [&](const PcWord& w, int min_gen) {
        int prev = min_gen - 1;
        for (auto [g, e] : w) {
            if (g < min_gen || g >= n) throw InvalidParameters("pc word: generator out of range");
            if (g <= prev) throw InvalidParameters("pc word: letters must be strictly ascending");
            if (e < 1 || e >= rel_orders[g]) throw InvalidParameters("pc word: bad exponent");
            prev = g;
        }
    };
    for (int i = 0; i < n; ++i) {
        if (rel_orders[i] < 2) throw InvalidParameters("pc relative orders must be >= 2");
        check_word(power[i], i + 1);
        if (static_cast<int>(conj[i].size()) != n)
            throw InvalidParameters("pc presentation: conj table shape mismatch");
        for (int j = i + 1; j < n; ++j) check_word(conj[i][j], i + 1);
    }
}

namespace {

// Collection from the left: multiplies a normal form by pending letters.
// Letters may carry any positive exponent; overflow consumes power relations.
struct Collector {
    const PcPresentation& P;
    int n;
    std::vector<std::pair<int, int64_t>> stack;
    int64_t steps = 0;

    explicit Collector(const PcPresentation& pres) : P(pres), n(pres.ngens()) {}

    void push_word(const PcWord& w, int64_t reps = 1) {
        for (int64_t r = 0; r < reps; ++r)
            for (size_t i = w.size(); i-- > 0;) stack.push_back(w[i]);
    }

    void run(std::vector<int64_t>& e) {
        while (!stack.empty()) {
            if (++steps > 50'000'000) throw InconsistentPresentation("collection did not terminate");
            auto [g, k] = stack.back();
            stack.pop_back();
            if (k == 0) continue;
            int top = -1;
            for (int j = n - 1; j > g; --j) {
                if (e[j] > 0) {
                    top = j;
                    break;
                }
            }
            if (top < 0) {
                // no violation: absorb into e[g], spilling power relations
                int64_t total = e[g] + k;
                int64_t o = P.rel_orders[g];
                e[g] = total % o;
                int64_t spills = total / o;
                if (spills > 0 && !P.power[g].empty()) push_word(P.power[g], spills);
                continue;
            }
            // strip tail T (indices > g), process one copy of g now, rest later
            if (k > 1) stack.emplace_back(g, k - 1);
            std::vector<std::pair<int, int64_t>> tail;
            for (int j = g + 1; j < n; ++j) {
                if (e[j] > 0) {
                    tail.emplace_back(j, e[j]);
                    e[j] = 0;
                }
            }
            int64_t o = P.rel_orders[g];
            int64_t total = e[g] + 1;
            e[g] = total % o;
            bool spill = total >= o;
            // pending order: [power word if spilled] then T^g; push in reverse
            for (size_t t = tail.size(); t-- > 0;) {
                auto [j, ej] = tail[t];
                const PcWord& w = P.conj[g][j];
                if (w.empty()) {
                    stack.emplace_back(j, ej);
                } else if (w.size() == 1 && w[0].first == j) {
                    stack.emplace_back(j, w[0].second * ej);
                } else {
                    push_word(w, ej);
                }
            }
            if (spill && !P.power[g].empty()) push_word(P.power[g]);
        }
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Group construction

void Group::finish_construction() {
    // inverse table
    inv_.assign(order_, 0);
    switch (backend_) {
        case Backend::Perm:
            for (Idx a = 0; a < order_; ++a) inv_[a] = perm_lookup(elems_[a].inverse());
            break;
        case Backend::Sub:
            for (Idx a = 0; a < order_; ++a) inv_[a] = parent_to_local_[parent_->inv(members_[a])];
            break;
        case Backend::Quot:
            for (Idx a = 0; a < order_; ++a) inv_[a] = proj_[parent_->inv(section_[a])];
            break;
        case Backend::Pc: {
            // a = g_i * rest (leading letter peeled once); inv(a) = inv(rest) * g_i^-1,
            // realized by the inverse permutation of the right-mult-by-g_i table.
            int n = pres_.ngens();
            std::vector<std::vector<Idx>> inv_mult(n);
            for (int i = 0; i < n; ++i) {
                inv_mult[i].resize(order_);
                const auto& tab = gen_mult_[i];
                for (Idx x = 0; x < order_; ++x) inv_mult[i][tab[x]] = x;
            }
            std::vector<int64_t> e(n);
            for (Idx a = 1; a < order_; ++a) {
                decode_pc(a, e);
                int lead = 0;
                while (!e[lead]) ++lead;
                Idx rest = a - static_cast<Idx>(stride_[lead]);
                inv_[a] = inv_mult[lead][inv_[rest]];
            }
            break;
        }
    }
    // conjugation tables
    gen_conj_.assign(gens_.size(), {});
    for (size_t i = 0; i < gens_.size(); ++i) {
        gen_conj_[i].resize(order_);
        Idx g = gens_[i], gi = inv_[g];
        for (Idx a = 0; a < order_; ++a) gen_conj_[i][a] = mult(mult(gi, a), g);
    }
}

Idx Group::mult_raw(Idx a, Idx b) const {
    switch (backend_) {
        case Backend::Perm:
            return perm_lookup(elems_[a].compose(elems_[b]));
        case Backend::Sub:
            return parent_to_local_[parent_->mult(members_[a], members_[b])];
        case Backend::Quot:
            return proj_[parent_->mult(section_[a], section_[b])];
        case Backend::Pc: {
            std::vector<int64_t> e(pres_.ngens());
            decode_pc(a, e);
            Collector col(pres_);
            std::vector<int64_t> eb(pres_.ngens());
            decode_pc(b, eb);
            for (int i = pres_.ngens() - 1; i >= 0; --i)
                if (eb[i]) col.stack.emplace_back(i, eb[i]);
            col.run(e);
            int64_t idx = 0;
            for (int i = 0; i < pres_.ngens(); ++i) idx += e[i] * stride_[i];
            return static_cast<Idx>(idx);
        }
    }
    return 0;
}

Idx Group::mult(Idx a, Idx b) const {
    if (backend_ == Backend::Pc && !pc_pow_mult_.empty()) {
        // right-multiply through binary power tables: b = g1^e1 ... gn^en
        int n = pres_.ngens();
        Idx x = a;
        int64_t rem = b;
        for (int i = 0; i < n; ++i) {
            int64_t e = rem / stride_[i];
            rem -= e * stride_[i];
            int j = 0;
            while (e) {
                if (e & 1) x = pc_pow_mult_[i][j][x];
                e >>= 1;
                ++j;
            }
        }
        return x;
    }
    return mult_raw(a, b);
}

Idx Group::pow(Idx a, int64_t e) const {
    Idx r = 0, b = a;
    while (e > 0) {
        if (e & 1) r = mult(r, b);
        b = mult(b, b);
        e >>= 1;
    }
    return r;
}

int64_t Group::element_order(Idx a) const {
    int64_t o = order_;
    for (int64_t l : prime_factors(order_))
        while (o % l == 0 && pow(a, o / l) == 0) o /= l;
    return o;
}

Idx Group::perm_lookup(const Permutation& p) const {
    uint64_t h = hash_range(p.img);
    auto it = perm_index_.find(h);
    if (it == perm_index_.end()) throw Error("permutation outside group (internal)");
    for (Idx cand : it->second)
        if (elems_[cand] == p) return cand;
    throw Error("permutation outside group (internal)");
}

void Group::decode_pc(Idx a, std::vector<int64_t>& e) const {
    int64_t x = a;
    for (int i = pres_.ngens() - 1; i >= 0; --i) {
        e[i] = x % pres_.rel_orders[i];
        x /= pres_.rel_orders[i];
    }
}

GroupRef Group::from_permutations(const std::vector<Permutation>& gens, int64_t max_order) {
    int32_t degree = 1;
    for (const auto& g : gens) degree = std::max(degree, g.degree());
    std::vector<Permutation> norm_gens;
    for (auto g : gens) {
        int32_t old = g.degree();
        g.img.resize(degree);
        for (int32_t i = old; i < degree; ++i) g.img[i] = i;
        for (int32_t i = 0; i < degree; ++i)
            if (g.img[i] < 0 || g.img[i] >= degree) throw InvalidParameters("bad permutation image");
        if (!g.is_identity()) norm_gens.push_back(g);
    }

    // closure
    std::vector<Permutation> elems{Permutation::identity(degree)};
    std::unordered_map<uint64_t, std::vector<size_t>> seen;
    seen[hash_range(elems[0].img)].push_back(0);
    auto find = [&](const Permutation& p) -> bool {
        auto it = seen.find(hash_range(p.img));
        if (it == seen.end()) return false;
        for (size_t c : it->second)
            if (elems[c] == p) return true;
        return false;
    };
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : norm_gens) {
            Permutation p = elems[head].compose(g);
            if (!find(p)) {
                if (static_cast<int64_t>(elems.size()) >= max_order)
                    throw OrderLimitExceeded("permutation group exceeds element cap");
                seen[hash_range(p.img)].push_back(elems.size());
                elems.push_back(std::move(p));
            }
        }
    }
    std::sort(elems.begin(), elems.end());

    auto G = std::shared_ptr<Group>(new Group());
    G->backend_ = Backend::Perm;
    G->order_ = static_cast<int64_t>(elems.size());
    G->elems_ = std::move(elems);
    for (Idx i = 0; i < G->order_; ++i)
        G->perm_index_[hash_range(G->elems_[i].img)].push_back(i);
    for (const auto& g : norm_gens) {
        Idx gi = G->perm_lookup(g);
        if (std::find(G->gens_.begin(), G->gens_.end(), gi) == G->gens_.end())
            G->gens_.push_back(gi);
    }
    G->gen_mult_.assign(G->gens_.size(), {});
    for (size_t i = 0; i < G->gens_.size(); ++i) {
        G->gen_mult_[i].resize(G->order_);
        for (Idx a = 0; a < G->order_; ++a) G->gen_mult_[i][a] = G->mult_raw(a, G->gens_[i]);
    }
    G->finish_construction();
    return G;
}

GroupRef Group::from_pc(const PcPresentation& pres, int64_t max_order) {
    pres.validate();
    int n = pres.ngens();
    int64_t order = 1;
    for (int64_t o : pres.rel_orders) {
        if (order > max_order / o) throw OrderLimitExceeded("pc group exceeds element cap");
        order *= o;
    }

    auto G = std::shared_ptr<Group>(new Group());
    G->backend_ = Backend::Pc;
    G->order_ = order;
    G->pres_ = pres;
    G->stride_.assign(n, 1);
    for (int i = n - 2; i >= 0; --i) G->stride_[i] = G->stride_[i + 1] * pres.rel_orders[i + 1];

    // consistency of the collected product (associativity on the standard test words)
    {
        auto nf_of_letter = [&](int g, int64_t k) {
            std::vector<int64_t> e(n, 0);
            Collector c(pres);
            c.stack.emplace_back(g, k);
            c.run(e);
            return e;
        };
        auto mul_nf = [&](std::vector<int64_t> lhs, const std::vector<int64_t>& rhs) {
            Collector c(pres);
            for (int i = n - 1; i >= 0; --i)
                if (rhs[i]) c.stack.emplace_back(i, rhs[i]);
            c.run(lhs);
            return lhs;
        };
        auto mul_letter = [&](std::vector<int64_t> lhs, int g, int64_t k) {
            Collector c(pres);
            c.stack.emplace_back(g, k);
            c.run(lhs);
            return lhs;
        };
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    auto lhs = mul_letter(mul_nf(nf_of_letter(k, 1), nf_of_letter(j, 1)), i, 1);
                    auto rhs = mul_nf(nf_of_letter(k, 1), mul_letter(nf_of_letter(j, 1), i, 1));
                    if (lhs != rhs) throw InconsistentPresentation("pc consistency (triple) failed");
                }
                auto lhs = mul_letter(nf_of_letter(j, pres.rel_orders[j]), i, 1);
                auto rhs = mul_nf(nf_of_letter(j, pres.rel_orders[j] - 1),
                                  mul_letter(nf_of_letter(j, 1), i, 1));
                if (lhs != rhs) throw InconsistentPresentation("pc consistency (power-left) failed");
                lhs = mul_nf(nf_of_letter(j, 1), nf_of_letter(i, pres.rel_orders[i]));
                rhs = mul_letter(mul_letter(nf_of_letter(j, 1), i, 1), i, pres.rel_orders[i] - 1);
                if (lhs != rhs) throw InconsistentPresentation("pc consistency (power-right) failed");
            }
            auto lhs = mul_letter(nf_of_letter(i, pres.rel_orders[i]), i, 1);
            auto rhs = mul_nf(nf_of_letter(i, 1), nf_of_letter(i, pres.rel_orders[i]));
            if (lhs != rhs) throw InconsistentPresentation("pc consistency (power-cycle) failed");
        }
    }

    // generator tables straight from collection, then everything else by hops
    G->gens_.resize(n);
    G->gen_mult_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        G->gens_[i] = static_cast<Idx>(G->stride_[i]);  // exponent vector with e_i = 1
        G->gen_mult_[i].resize(order);
    }
    std::vector<int64_t> e(n);
    for (Idx a = 0; a < order; ++a) {
        G->decode_pc(a, e);
        for (int i = 0; i < n; ++i) {
            std::vector<int64_t> ea = e;
            Collector c(pres);
            c.stack.emplace_back(i, 1);
            c.run(ea);
            int64_t idx = 0;
            for (int t = 0; t < n; ++t) idx += ea[t] * G->stride_[t];
            G->gen_mult_[i][a] = static_cast<Idx>(idx);
        }
    }
    // binary power tables: [i][j] right-multiplies by g_i^(2^j)
    G->pc_pow_mult_.resize(n);
    for (int i = 0; i < n; ++i) {
        G->pc_pow_mult_[i].push_back(G->gen_mult_[i]);
        for (int64_t span = 2; span < pres.rel_orders[i]; span *= 2) {
            const auto& prev = G->pc_pow_mult_[i].back();
            std::vector<Idx> next(order);
            for (Idx a = 0; a < order; ++a) next[a] = prev[prev[a]];
            G->pc_pow_mult_[i].push_back(std::move(next));
        }
    }
    G->finish_construction();
    return G;
}

GroupRef Group::trivial() {
    auto G = std::shared_ptr<Group>(new Group());
    G->backend_ = Backend::Pc;
    G->order_ = 1;
    G->finish_construction();
    return G;
}

GroupRef Group::subview(GroupRef parent, const std::vector<Idx>& members,
                        const std::vector<Idx>& gens) {
    auto G = std::shared_ptr<Group>(new Group());
    G->backend_ = Backend::Sub;
    G->order_ = static_cast<int64_t>(members.size());
    G->parent_ = parent;
    G->members_ = members;
    G->parent_to_local_.assign(parent->order(), -1);
    for (Idx i = 0; i < G->order_; ++i) G->parent_to_local_[members[i]] = i;
    for (Idx g : gens)
        if (g != 0 &&
            std::find(G->gens_.begin(), G->gens_.end(), G->parent_to_local_[g]) == G->gens_.end())
            G->gens_.push_back(G->parent_to_local_[g]);
    G->gen_mult_.assign(G->gens_.size(), {});
    for (size_t i = 0; i < G->gens_.size(); ++i) {
        G->gen_mult_[i].resize(G->order_);
        for (Idx a = 0; a < G->order_; ++a) G->gen_mult_[i][a] = G->mult_raw(a, G->gens_[i]);
    }
    G->finish_construction();
    return G;
}

GroupRef Group::quotient_group(GroupRef parent, std::vector<Idx> proj, std::vector<Idx> section,
                               const std::vector<Idx>& gens) {
    auto G = std::shared_ptr<Group>(new Group());
    G->backend_ = Backend::Quot;
    G->order_ = static_cast<int64_t>(section.size());
    G->parent_ = parent;
    G->proj_ = std::move(proj);
    G->section_ = std::move(section);
    for (Idx g : gens) {
        Idx q = G->proj_[g];
        if (q != 0 && std::find(G->gens_.begin(), G->gens_.end(), q) == G->gens_.end())
            G->gens_.push_back(q);
    }
    G->gen_mult_.assign(G->gens_.size(), {});
    for (size_t i = 0; i < G->gens_.size(); ++i) {
        G->gen_mult_[i].resize(G->order_);
        for (Idx a = 0; a < G->order_; ++a) G->gen_mult_[i][a] = G->mult_raw(a, G->gens_[i]);
    }
    G->finish_construction();
    return G;
}

const std::vector<std::vector<Idx>>& Group::conjugacy_classes() const {
    std::call_once(class_once_, [this] {
        class_of_.assign(order_, -1);
        for (Idx rep = 0; rep < order_; ++rep) {
            if (class_of_[rep] >= 0) continue;
            int32_t id = static_cast<int32_t>(classes_.size());
            std::vector<Idx> cls{rep};
            class_of_[rep] = id;
            for (size_t head = 0; head < cls.size(); ++head) {
                for (size_t i = 0; i < gens_.size(); ++i) {
                    Idx y = gen_conj_[i][cls[head]];
                    if (class_of_[y] < 0) {
                        class_of_[y] = id;
                        cls.push_back(y);
                    }
                }
            }
            std::sort(cls.begin(), cls.end());
            classes_.push_back(std::move(cls));
        }
    });
    return classes_;
}

const std::vector<int32_t>& Group::class_of() const {
    conjugacy_classes();
    return class_of_;
}

const std::vector<Idx>* Group::cayley_table(int64_t cap) const {
    if (order_ > cap) return nullptr;
    std::call_once(cayley_once_, [this] {
        cayley_.resize(order_ * order_);
        for (Idx a = 0; a < order_; ++a)
            for (Idx b = 0; b < order_; ++b) cayley_[a * order_ + b] = mult(a, b);
        cayley_built_ = true;
    });
    return cayley_built_ ? &cayley_ : nullptr;
}

std::string Group::element_name(Idx a) const {
    switch (backend_) {
        case Backend::Perm:
            return elems_[a].cycle_notation();
        case Backend::Sub:
            return parent_->element_name(members_[a]);
        case Backend::Quot:
            return parent_->element_name(section_[a]) + "N";
        case Backend::Pc: {
            if (a == 0) return "1";
            std::vector<int64_t> e(pres_.ngens());
            decode_pc(a, e);
            std::string out;
            for (int i = 0; i < pres_.ngens(); ++i) {
                if (!e[i]) continue;
                if (!out.empty()) out += "*";
                out += i < static_cast<int>(pres_.names.size()) ? pres_.names[i]
                                                                : "g" + std::to_string(i + 1);
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
            return out;
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// SubgroupHandle

bool SubgroupHandle::contains(Idx x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

uint64_t SubgroupHandle::hash() const { return hash_range(members); }

void SubgroupHandle::check_invariants() const {
    if (members.empty() || members[0] != 0) throw Error("subgroup must contain the identity");
    if (parent->order() % order() != 0) throw Error("subgroup order violates Lagrange");
    for (Idx g : gens)
        if (!contains(g)) throw Error("subgroup generator outside member list");
}

}  // namespace fqg
