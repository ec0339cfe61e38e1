#include "pfa/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace pfa {

namespace {

void check_axioms(const std::vector<int>& table, int n, int identity) {
    auto at = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (at(a, b) < 0 || at(a, b) >= n) throw ParameterError("table entry out of range");
    for (int a = 0; a < n; ++a)
        if (at(identity, a) != a || at(a, identity) != a)
            throw ParameterError("identity axiom fails");
    for (int a = 0; a < n; ++a) {
        bool has_inv = false;
        for (int b = 0; b < n; ++b)
            if (at(a, b) == identity && at(b, a) == identity) { has_inv = true; break; }
        if (!has_inv) throw ParameterError("inverse axiom fails");
    }
    if (n <= 60) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c)))
                        throw ParameterError("associativity fails");
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int i = 0; i < 200000; ++i) {
            int a = d(rng), b = d(rng), c = d(rng);
            if (at(at(a, b), c) != at(a, at(b, c)))
                throw ParameterError("associativity fails (sampled)");
        }
    }
}

std::vector<int> closure_of(const std::vector<int>& table, int n, int identity,
                            const std::vector<int>& gens) {
    std::vector<char> seen(n, 0);
    std::vector<int> frontier{identity}, all{identity};
    seen[identity] = 1;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gens) {
                int y = table[static_cast<size_t>(x) * n + g];
                if (!seen[y]) { seen[y] = 1; next.push_back(y); all.push_back(y); }
            }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

int FiniteGroup::pow(int a, long e) const {
    int r = identity_;
    if (e < 0) { a = inv(a); e = -e; }
    int base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::element_order(int a) const {
    if (element_order_.empty()) {
        element_order_.assign(order_, 0);
        for (int x = 0; x < order_; ++x) {
            int k = 1, y = x;
            while (y != identity_) { y = mul(y, x); ++k; }
            element_order_[x] = k;
        }
    }
    return element_order_[a];
}

std::vector<int> FiniteGroup::generator_indices() const {
    std::vector<int> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.push_back(g.second);
    return out;
}

const std::vector<int>& FiniteGroup::order_profile() const {
    if (order_profile_.empty()) {
        order_profile_.reserve(order_);
        for (int x = 0; x < order_; ++x) order_profile_.push_back(element_order(x));
        std::sort(order_profile_.begin(), order_profile_.end());
    }
    return order_profile_;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (int a = 0; a < order_; ++a)
        if (element_order(a) == order_) return true;
    return false;
}

GroupPtr FiniteGroup::from_table(std::vector<int> table, int identity,
                                 std::vector<std::pair<std::string, int>> generators,
                                 std::vector<std::string> element_names) {
    const size_t n2 = table.size();
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n2))));
    // size must be a perfect square
    if (static_cast<size_t>(n) * n != n2 || n <= 0) throw ParameterError("table is not square");
    if (identity < 0 || identity >= n) throw ParameterError("identity index out of range");
    check_axioms(table, n, identity);

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->identity_ = identity;
    g->table_ = std::move(table);
    g->inverse_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g->mul(a, b) == identity && g->mul(b, a) == identity) { g->inverse_[a] = b; break; }

    // An empty generator list means "unspecified"; callers needing one use
    // minimal_generating_set.
    if (!generators.empty()) {
        std::vector<int> gen_idx;
        for (auto& [label, idx] : generators) {
            if (idx < 0 || idx >= n) throw ParameterError("generator index out of range");
            gen_idx.push_back(idx);
        }
        if (static_cast<int>(closure_of(g->table_, n, identity, gen_idx).size()) != n)
            throw ParameterError("generators do not generate the group");
    }
    g->generators_ = std::move(generators);
    g->element_names_ = std::move(element_names);
    return g;
}

// --- families ---------------------------------------------------------------

GroupPtr cyclic_group(int n) {
    if (n <= 0) throw ParameterError("cyclic_group: n must be positive");
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    std::vector<std::pair<std::string, int>> gens;
    if (n > 1) gens.emplace_back("g", 1);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = "g^" + std::to_string(i);
    return FiniteGroup::from_table(std::move(t), 0, std::move(gens), std::move(names));
}

// Elements s^i t^e indexed as i + n*e.
GroupPtr dihedral_group(int n) {
    if (n <= 0) throw ParameterError("dihedral_group: n must be positive");
    int m = 2 * n;
    std::vector<int> t(static_cast<size_t>(m) * m);
    auto idx = [&](int i, int e) { return ((i % n + n) % n) + n * e; };
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < n; ++j)
                for (int f = 0; f < 2; ++f) {
                    // (s^i t^e)(s^j t^f) = s^{i + j or i - j} t^{e+f}
                    int k = e ? idx(i - j, (e + f) % 2) : idx(i + j, (e + f) % 2);
                    t[static_cast<size_t>(idx(i, e)) * m + idx(j, f)] = k;
                }
    std::vector<std::pair<std::string, int>> gens;
    gens.emplace_back("s", idx(1, 0));
    gens.emplace_back("t", idx(0, 1));
    if (n == 1) gens.erase(gens.begin());  // s is the identity in D_1
    std::vector<std::string> names(m);
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
            names[idx(i, e)] = "s^" + std::to_string(i) + (e ? " t" : "");
    return FiniteGroup::from_table(std::move(t), 0, std::move(gens), std::move(names));
}

// Unit-quaternion model: k = exp(i*pi/m), q = j. k has order 2m, q^2 = k^m,
// and q k q^-1 = k^-1. Elements k^i q^e indexed as i + 2m*e.
GroupPtr binary_dihedral_group(int m) {
    if (m <= 0) throw ParameterError("binary_dihedral_group: m must be positive");
    int n = 2 * m, sz = 4 * m;
    std::vector<int> t(static_cast<size_t>(sz) * sz);
    auto idx = [&](int i, int e) { return ((i % n + n) % n) + n * e; };
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < n; ++j)
                for (int f = 0; f < 2; ++f) {
                    int k;
                    if (e == 0) k = idx(i + j, f);
                    else if (f == 0) k = idx(i - j, 1);
                    else k = idx(i - j + m, 0);  // q^2 = k^m
                    t[static_cast<size_t>(idx(i, e)) * sz + idx(j, f)] = k;
                }
    std::vector<std::pair<std::string, int>> gens{{"k", idx(1, 0)}, {"q", idx(0, 1)}};
    std::vector<std::string> names(sz);
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
            names[idx(i, e)] = "k^" + std::to_string(i) + (e ? " q" : "");
    return FiniteGroup::from_table(std::move(t), 0, std::move(gens), std::move(names));
}

namespace {

GroupPtr permutation_group(int n, bool even_only) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        if (!even_only || inversions % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // perms are in lexicographic order; identity is index 0
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    int sz = static_cast<int>(perms.size());
    std::vector<int> t(static_cast<size_t>(sz) * sz);
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // (a*b)(i) = a(b(i))
            t[static_cast<size_t>(a) * sz + b] = index[c];
        }
    auto cycle_name = [&](const std::vector<int>& q) {
        std::string s;
        std::vector<char> used(n, 0);
        for (int i = 0; i < n; ++i) {
            if (used[i] || q[i] == i) continue;
            s += "(";
            int j = i;
            do { s += std::to_string(j + 1); used[j] = 1; j = q[j]; } while (j != i);
            s += ")";
        }
        return s.empty() ? std::string("e") : s;
    };
    std::vector<std::string> names;
    names.reserve(perms.size());
    for (const auto& q : perms) names.push_back(cycle_name(q));

    std::vector<std::pair<std::string, int>> gens;
    if (even_only && n >= 3) {
        // 3-cycle (123) and, when it exists, the double transposition (12)(34)
        std::vector<int> c3 = base;
        c3[0] = 1; c3[1] = 2; c3[2] = 0;
        gens.emplace_back("x", index[c3]);
        if (n >= 4) {
            std::vector<int> dd = base;
            dd[0] = 1; dd[1] = 0; dd[2] = 3; dd[3] = 2;
            gens.emplace_back("y", index[dd]);
        }
        if (n == 5) {
            std::vector<int> c5{1, 2, 3, 4, 0};
            gens.emplace_back("z", index[c5]);
        }
    } else if (!even_only && n >= 2) {
        std::vector<int> cyc(n);
        for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
        std::vector<int> sw = base;
        std::swap(sw[0], sw[1]);
        gens.emplace_back("c", index[cyc]);
        gens.emplace_back("t", index[sw]);
    }
    return FiniteGroup::from_table(std::move(t), 0, std::move(gens), std::move(names));
}

}  // namespace

GroupPtr symmetric_group(int n) {
    if (n < 1 || n > 5) throw ParameterError("symmetric_group: supported for 1 <= n <= 5");
    return permutation_group(n, false);
}

GroupPtr alternating_group(int n) {
    if (n < 1 || n > 5) throw ParameterError("alternating_group: supported for 1 <= n <= 5");
    if (n < 3) return cyclic_group(1);
    return permutation_group(n, true);
}

GroupPtr tetrahedral_group() { return alternating_group(4); }
GroupPtr octahedral_group() { return symmetric_group(4); }
GroupPtr icosahedral_group() { return alternating_group(5); }

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    int na = a->order(), nb = b->order(), n = na * nb;
    auto idx = [&](int x, int y) { return x * nb + y; };
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    t[static_cast<size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                        idx(a->mul(x1, x2), b->mul(y1, y2));
    std::vector<std::pair<std::string, int>> gens;
    std::set<std::string> labels;
    for (const auto& [label, g] : a->generators()) {
        gens.emplace_back(label, idx(g, b->identity()));
        labels.insert(label);
    }
    for (const auto& [label, g] : b->generators()) {
        std::string l = label;
        while (labels.count(l)) l += "'";
        labels.insert(l);
        gens.emplace_back(l, idx(a->identity(), g));
    }
    return FiniteGroup::from_table(std::move(t), idx(a->identity(), b->identity()),
                                   std::move(gens));
}

GroupPtr semidirect_product(const GroupPtr& k, const GroupPtr& q,
                            const std::vector<std::vector<int>>& action) {
    int nk = k->order(), nq = q->order(), n = nk * nq;
    if (static_cast<int>(action.size()) != nq)
        throw ParameterError("semidirect_product: need one automorphism per Q element");
    for (int x = 0; x < nq; ++x) {
        GroupHom h{k, k, action[x]};
        if (static_cast<int>(action[x].size()) != nk || !h.is_automorphism())
            throw ParameterError("semidirect_product: action value is not an automorphism");
    }
    for (int x = 0; x < nq; ++x)
        for (int y = 0; y < nq; ++y) {
            int xy = q->mul(x, y);
            for (int e = 0; e < nk; ++e)
                if (action[xy][e] != action[x][action[y][e]])
                    throw ParameterError("semidirect_product: action is not a homomorphism");
        }
    // (k1, q1)(k2, q2) = (k1 * q1(k2), q1 q2), with q1 acting via action[q1]
    auto idx = [&](int kk, int qq) { return kk * nq + qq; };
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int k1 = 0; k1 < nk; ++k1)
        for (int q1 = 0; q1 < nq; ++q1)
            for (int k2 = 0; k2 < nk; ++k2)
                for (int q2 = 0; q2 < nq; ++q2)
                    t[static_cast<size_t>(idx(k1, q1)) * n + idx(k2, q2)] =
                        idx(k->mul(k1, action[q1][k2]), q->mul(q1, q2));
    std::vector<std::pair<std::string, int>> gens;
    std::set<std::string> labels;
    for (const auto& [label, g] : k->generators()) {
        gens.emplace_back(label, idx(g, q->identity()));
        labels.insert(label);
    }
    for (const auto& [label, g] : q->generators()) {
        std::string l = label;
        while (labels.count(l)) l += "'";
        labels.insert(l);
        gens.emplace_back(l, idx(k->identity(), g));
    }
    return FiniteGroup::from_table(std::move(t), idx(k->identity(), q->identity()),
                                   std::move(gens));
}

// --- homomorphisms ----------------------------------------------------------

bool GroupHom::is_homomorphism() const {
    if (static_cast<int>(image.size()) != domain->order()) return false;
    for (int x : image)
        if (x < 0 || x >= codomain->order()) return false;
    if (image[domain->identity()] != codomain->identity()) return false;
    for (int a = 0; a < domain->order(); ++a)
        for (int b = 0; b < domain->order(); ++b)
            if (image[domain->mul(a, b)] != codomain->mul(image[a], image[b])) return false;
    return true;
}

bool GroupHom::is_injective() const {
    std::set<int> seen(image.begin(), image.end());
    return static_cast<int>(seen.size()) == domain->order();
}

bool GroupHom::is_surjective() const {
    std::set<int> seen(image.begin(), image.end());
    return static_cast<int>(seen.size()) == codomain->order();
}

bool GroupHom::is_automorphism() const {
    return domain.get() == codomain.get() && is_injective() && is_homomorphism();
}

GroupHom GroupHom::identity(const GroupPtr& g) {
    std::vector<int> im(g->order());
    std::iota(im.begin(), im.end(), 0);
    return {g, g, std::move(im)};
}

GroupHom GroupHom::compose(const GroupHom& second, const GroupHom& first) {
    if (first.codomain.get() != second.domain.get())
        throw ParameterError("compose: domain mismatch");
    std::vector<int> im(first.domain->order());
    for (int x = 0; x < first.domain->order(); ++x) im[x] = second.image[first.image[x]];
    return {first.domain, second.codomain, std::move(im)};
}

GroupHom GroupHom::inverse() const {
    if (domain->order() != codomain->order() || !is_injective())
        throw ParameterError("inverse: homomorphism is not bijective");
    std::vector<int> im(codomain->order());
    for (int x = 0; x < domain->order(); ++x) im[image[x]] = x;
    return {codomain, domain, std::move(im)};
}

GroupHom conjugation_automorphism(const GroupPtr& g, int by) {
    std::vector<int> im(g->order());
    for (int x = 0; x < g->order(); ++x) im[x] = g->conj(by, x);
    return {g, g, std::move(im)};
}

// --- subgroups ---------------------------------------------------------------

bool Subgroup::contains(int parent_index) const {
    return std::binary_search(elements.begin(), elements.end(), parent_index);
}

int Subgroup::index_of(int parent_index) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), parent_index);
    if (it == elements.end() || *it != parent_index) return -1;
    return static_cast<int>(it - elements.begin());
}

namespace {

Subgroup make_subgroup(const GroupPtr& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    int m = static_cast<int>(elems.size());
    std::vector<int> pos(g->order(), -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    std::vector<int> t(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = g->mul(elems[i], elems[j]);
            if (pos[p] < 0) throw ParameterError("subgroup elements not closed");
            t[static_cast<size_t>(i) * m + j] = pos[p];
        }
    auto sub = FiniteGroup::from_table(std::move(t), pos[g->identity()], {});
    GroupHom inc{sub, g, elems};
    return Subgroup{g, std::move(elems), sub, std::move(inc)};
}

}  // namespace

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
    std::vector<char> seen(g->order(), 0);
    std::vector<int> all{g->identity()}, frontier{g->identity()};
    seen[g->identity()] = 1;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int gen : gens) {
                int y = g->mul(x, gen);
                if (!seen[y]) { seen[y] = 1; next.push_back(y); all.push_back(y); }
            }
        frontier = std::move(next);
    }
    return make_subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return subgroup_generated(g, {}); }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(g, std::move(all));
}

Subgroup center(const GroupPtr& g) {
    std::vector<int> z;
    for (int x = 0; x < g->order(); ++x) {
        bool central = true;
        for (int y = 0; y < g->order() && central; ++y)
            if (g->mul(x, y) != g->mul(y, x)) central = false;
        if (central) z.push_back(x);
    }
    return make_subgroup(g, std::move(z));
}

Subgroup centralizer(const GroupPtr& g, const std::vector<int>& elems) {
    std::vector<int> c;
    for (int x = 0; x < g->order(); ++x) {
        bool ok = true;
        for (int y : elems)
            if (g->mul(x, y) != g->mul(y, x)) { ok = false; break; }
        if (ok) c.push_back(x);
    }
    return make_subgroup(g, std::move(c));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
    std::vector<int> n;
    for (int x = 0; x < g->order(); ++x) {
        bool ok = true;
        for (int y : h.elements)
            if (!h.contains(g->conj(x, y))) { ok = false; break; }
        if (ok) n.push_back(x);
    }
    return make_subgroup(g, std::move(n));
}

bool is_normal(const GroupPtr& g, const Subgroup& h) {
    for (int x = 0; x < g->order(); ++x)
        for (int y : h.elements)
            if (!h.contains(g->conj(x, y))) return false;
    return true;
}

std::vector<std::vector<int>> conjugacy_classes(const GroupPtr& g) {
    std::vector<char> seen(g->order(), 0);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < g->order(); ++x) {
        if (seen[x]) continue;
        std::set<int> cls;
        for (int y = 0; y < g->order(); ++y) cls.insert(g->conj(y, x));
        std::vector<int> v(cls.begin(), cls.end());
        for (int e : v) seen[e] = 1;
        classes.push_back(std::move(v));
    }
    return classes;
}

Quotient quotient_by(const GroupPtr& g, const Subgroup& normal) {
    if (!is_normal(g, normal)) throw ParameterError("quotient_by: subgroup is not normal");
    int n = g->order();
    std::vector<int> class_of(n, -1), reps;
    for (int x = 0; x < n; ++x) {
        if (class_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : normal.elements) class_of[g->mul(x, h)] = c;
    }
    int m = static_cast<int>(reps.size());
    std::vector<int> t(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[static_cast<size_t>(a) * m + b] = class_of[g->mul(reps[a], reps[b])];
    auto q = FiniteGroup::from_table(std::move(t), class_of[g->identity()], {});
    GroupHom proj{g, q, class_of};
    return Quotient{q, std::move(class_of), std::move(reps), std::move(proj)};
}

bool ShortExactSequence::validate() const {
    if (!inclusion.is_homomorphism() || !projection.is_homomorphism()) return false;
    if (!inclusion.is_injective() || !projection.is_surjective()) return false;
    if (kernel->order() * quotient->order() != total->order()) return false;
    std::set<int> img(inclusion.image.begin(), inclusion.image.end());
    for (int x = 0; x < total->order(); ++x) {
        bool in_ker = projection.image[x] == quotient->identity();
        if (in_ker != (img.count(x) > 0)) return false;
    }
    return true;
}

bool splits_over_index2(const GroupPtr& total, const std::vector<int>& kernel_elements) {
    std::set<int> ker(kernel_elements.begin(), kernel_elements.end());
    for (int x = 0; x < total->order(); ++x)
        if (!ker.count(x) && total->mul(x, x) == total->identity()) return true;
    return false;
}

// --- automorphisms / isomorphism ---------------------------------------------

std::vector<std::vector<int>> generator_words(const GroupPtr& g, const std::vector<int>& gens) {
    std::vector<std::vector<int>> words(g->order());
    std::vector<char> seen(g->order(), 0);
    std::vector<int> frontier{g->identity()};
    seen[g->identity()] = 1;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (size_t i = 0; i < gens.size(); ++i) {
                int y = g->mul(x, gens[i]);
                if (!seen[y]) {
                    seen[y] = 1;
                    words[y] = words[x];
                    words[y].push_back(static_cast<int>(i));
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    if (std::count(seen.begin(), seen.end(), 1) != g->order())
        throw ParameterError("generator_words: generators do not generate");
    return words;
}

std::vector<int> minimal_generating_set(const GroupPtr& g) {
    if (g->order() == 1) return {};
    std::vector<int> by_order(g->order());
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
        return g->element_order(a) > g->element_order(b);
    });
    std::vector<int> gens;
    std::set<int> have{g->identity()};
    for (int x : by_order) {
        if (have.count(x)) continue;
        gens.push_back(x);
        auto sub = subgroup_generated(g, gens);
        have = std::set<int>(sub.elements.begin(), sub.elements.end());
        if (static_cast<int>(have.size()) == g->order()) return gens;
    }
    throw ParameterError("minimal_generating_set: failed");  // unreachable
}

namespace {

// Backtracking over images of `gens`; each candidate must preserve element
// order, and partial images are extended by words then fully verified.
template <typename Callback>
void find_homomorphisms(const GroupPtr& g, const std::vector<int>& gens,
                        const GroupPtr& h, bool bijective_only, Callback&& cb,
                        const std::vector<int>* forced_phi_g = nullptr,
                        const std::vector<int>* forced_phi_h = nullptr) {
    auto words = generator_words(g, gens);
    std::vector<int> choice(gens.size(), -1);

    auto build_image = [&]() -> std::optional<std::vector<int>> {
        std::vector<int> im(g->order());
        for (int x = 0; x < g->order(); ++x) {
            int v = h->identity();
            for (int gi : words[x]) v = h->mul(v, choice[gi]);
            im[x] = v;
        }
        // full homomorphism check
        for (int a = 0; a < g->order(); ++a)
            for (int b = 0; b < g->order(); ++b)
                if (im[g->mul(a, b)] != h->mul(im[a], im[b])) return std::nullopt;
        if (bijective_only) {
            std::vector<char> hit(h->order(), 0);
            for (int v : im) {
                if (hit[v]) return std::nullopt;
                hit[v] = 1;
            }
        }
        return im;
    };

    // candidates per generator: same element order (bijective case)
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int ord = g->element_order(gens[i]);
        for (int y = 0; y < h->order(); ++y) {
            if (bijective_only ? h->element_order(y) == ord : ord % h->element_order(y) == 0) {
                if (forced_phi_g && (*forced_phi_g)[gens[i]] != (*forced_phi_h)[y]) continue;
                candidates[i].push_back(y);
            }
        }
    }

    // depth-first over candidate tuples
    std::vector<size_t> pos(gens.size(), 0);
    size_t depth = 0;
    bool stop = false;
    while (!stop) {
        if (pos[depth] >= candidates[depth].size()) {
            if (depth == 0) break;
            pos[depth] = 0;
            --depth;
            ++pos[depth];
            continue;
        }
        choice[depth] = candidates[depth][pos[depth]];
        if (depth + 1 < gens.size()) {
            ++depth;
            continue;
        }
        if (auto im = build_image()) {
            if (!cb(*im)) stop = true;
        }
        ++pos[depth];
    }
}

}  // namespace

int AutomorphismGroup::index_of(const std::vector<int>& image) const {
    auto cmp = [](const GroupHom& a, const std::vector<int>& b) { return a.image < b; };
    auto it = std::lower_bound(maps.begin(), maps.end(), image, cmp);
    if (it == maps.end() || it->image != image) return -1;
    return static_cast<int>(it - maps.begin());
}

AutomorphismGroup automorphism_group(const GroupPtr& g, int bound) {
    if (g->order() > bound) throw CapacityError("automorphism_group: order exceeds bound");
    if (g->order() == 1) {
        AutomorphismGroup out;
        out.group = cyclic_group(1);
        out.maps = {GroupHom::identity(g)};
        return out;
    }
    std::vector<int> gens = g->generators().empty() ? minimal_generating_set(g)
                                                    : g->generator_indices();
    std::vector<std::vector<int>> images;
    find_homomorphisms(g, gens, g, true, [&](const std::vector<int>& im) {
        images.push_back(im);
        return true;
    });
    std::sort(images.begin(), images.end());
    AutomorphismGroup out;
    out.maps.reserve(images.size());
    for (auto& im : images) out.maps.push_back(GroupHom{g, g, std::move(im)});

    int m = static_cast<int>(out.maps.size());
    auto find = [&](const std::vector<int>& im) {
        auto it = std::lower_bound(out.maps.begin(), out.maps.end(), im,
                                   [](const GroupHom& a, const std::vector<int>& b) {
                                       return a.image < b;
                                   });
        return static_cast<int>(it - out.maps.begin());
    };
    std::vector<int> t(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            // product = maps[i] o maps[j]
            std::vector<int> comp(g->order());
            for (int x = 0; x < g->order(); ++x) comp[x] = out.maps[i].image[out.maps[j].image[x]];
            t[static_cast<size_t>(i) * m + j] = find(comp);
        }
    int id = find(GroupHom::identity(g).image);
    out.group = FiniteGroup::from_table(std::move(t), id, {});
    return out;
}

InnOut inner_and_outer(const GroupPtr& g, const AutomorphismGroup& aut) {
    std::set<int> inner_set;
    for (int x = 0; x < g->order(); ++x) {
        auto mu = conjugation_automorphism(g, x);
        int i = aut.index_of(mu.image);
        if (i < 0) throw ParameterError("inner_and_outer: conjugation missing from Aut");
        inner_set.insert(i);
    }
    Subgroup inner = subgroup_generated(aut.group, {inner_set.begin(), inner_set.end()});
    if (inner.elements.size() != inner_set.size())
        throw ParameterError("inner_and_outer: inner automorphisms not closed");
    Quotient outer = quotient_by(aut.group, inner);
    return InnOut{std::move(inner), std::move(outer)};
}

std::optional<GroupHom> isomorphism(const GroupPtr& g, const GroupPtr& h, int bound) {
    if (g->order() != h->order()) return std::nullopt;
    if (g->order() > bound) throw CapacityError("isomorphism: order exceeds bound");
    if (g->order_profile() != h->order_profile()) return std::nullopt;
    if (g->order() == 1) return GroupHom{g, h, {h->identity()}};
    std::vector<int> gens = g->generators().empty() ? minimal_generating_set(g)
                                                    : g->generator_indices();
    std::optional<GroupHom> found;
    find_homomorphisms(g, gens, h, true, [&](const std::vector<int>& im) {
        found = GroupHom{g, h, im};
        return false;  // stop at first
    });
    return found;
}

bool isomorphic(const GroupPtr& g, const GroupPtr& h, int bound) {
    return isomorphism(g, h, bound).has_value();
}

std::optional<GroupHom> isomorphism_matching(const GroupPtr& g, const GroupHom& phi_g,
                                             const GroupPtr& h, const GroupHom& phi_h,
                                             int bound) {
    if (g->order() != h->order()) return std::nullopt;
    if (g->order() > bound) throw CapacityError("isomorphism_matching: order exceeds bound");
    if (g->order_profile() != h->order_profile()) return std::nullopt;
    if (phi_g.codomain->order() != phi_h.codomain->order())
        throw ParameterError("isomorphism_matching: codomain mismatch");
    if (g->order() == 1) return GroupHom{g, h, {h->identity()}};
    std::vector<int> gens = g->generators().empty() ? minimal_generating_set(g)
                                                    : g->generator_indices();
    std::optional<GroupHom> found;
    find_homomorphisms(g, gens, h, true, [&](const std::vector<int>& im) {
        for (int x = 0; x < g->order(); ++x)
            if (phi_g.image[x] != phi_h.image[im[x]]) return true;  // keep searching
        found = GroupHom{g, h, im};
        return false;
    }, &phi_g.image, &phi_h.image);
    return found;
}

}  // namespace pfa
