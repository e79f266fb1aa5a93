#include "comin/root_system.hpp"

#include "comin/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace comin {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "C") return Family::C;
    if (name == "D") return Family::D;
    if (name == "E6") return Family::E6;
    if (name == "E7") return Family::E7;
    return std::nullopt;
}

std::size_t expected_root_count(Family f, int rank) {
    std::size_t n = static_cast<std::size_t>(rank);
    switch (f) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E6: return 72;
        case Family::E7: return 126;
    }
    return 0;
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(Family f, int rank) {
    std::vector<std::pair<int, int>> e;
    switch (f) {
        case Family::A:
        case Family::B:
        case Family::C:
            for (int i = 0; i + 1 < rank; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::D:
            for (int i = 0; i + 1 < rank - 1; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(rank - 3, rank - 1);
            break;
        case Family::E6:
            e = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
            break;
        case Family::E7:
            e = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}};
            break;
    }
    return e;
}

void check_rank(Family f, int rank) {
    bool ok = false;
    switch (f) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E6: ok = rank == 6; break;
        case Family::E7: ok = rank == 7; break;
    }
    if (!ok)
        throw ConfigError("unsupported family/rank pair: " + family_name(f) + std::to_string(rank));
}

} // namespace

RootSystem RootSystem::build(Family family, int rank) {
    check_rank(family, rank);
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;

    rs.simple_len2_.assign(rank, 2);
    if (family == Family::B) rs.simple_len2_[rank - 1] = 1;
    if (family == Family::C)
        for (int i = 0; i < rank - 1; ++i) rs.simple_len2_[i] = 1;
    rs.two_lengths_ = family == Family::B || family == Family::C;

    rs.cartan_.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) rs.cartan_[i][i] = 2;
    for (auto [i, j] : dynkin_edges(family, rank)) {
        // (alpha_i, alpha_j) = -max(len2_i, len2_j)/2 across a Dynkin edge.
        int m = std::max(rs.simple_len2_[i], rs.simple_len2_[j]);
        rs.cartan_[i][j] = -m / rs.simple_len2_[i];
        rs.cartan_[j][i] = -m / rs.simple_len2_[j];
    }

    QMatrix c(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c.at(i, j) = rs.cartan_[i][j];
    rs.inverse_cartan_ = c.inverse();

    rs.generate_roots();
    rs.validate();
    return rs;
}

void RootSystem::generate_roots() {
    // Reflection closure of the simple roots.  Simple reflections preserve
    // root length, so the long/short flag propagates along the closure.
    std::map<std::vector<int>, bool> seen;  // coords -> is_long
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < rank_; ++i) {
        std::vector<int> c(rank_, 0);
        c[i] = 1;
        seen.emplace(c, simple_len2_[i] == 2);
        queue.push_back(c);
    }
    while (!queue.empty()) {
        std::vector<int> c = queue.front();
        queue.pop_front();
        bool lng = seen.at(c);
        for (int i = 0; i < rank_; ++i) {
            long pairing = 0;
            for (int j = 0; j < rank_; ++j) pairing += static_cast<long>(cartan_[i][j]) * c[j];
            std::vector<int> rc = c;
            rc[i] -= static_cast<int>(pairing);
            if (seen.emplace(rc, lng).second) queue.push_back(rc);
        }
    }

    roots_.reserve(seen.size());
    for (const auto& [coords, lng] : seen) {
        Root r;
        r.coords = coords;
        r.height = std::accumulate(coords.begin(), coords.end(), 0);
        r.is_long = lng;
        roots_.push_back(std::move(r));
    }
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coords < b.coords;
    });
    for (std::size_t i = 0; i < roots_.size(); ++i) index_of_[roots_[i].coords] = static_cast<int>(i);

    simple_idx_.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        std::vector<int> c(rank_, 0);
        c[i] = 1;
        simple_idx_[i] = static_cast<std::size_t>(index_of_.at(c));
    }
}

void RootSystem::validate() const {
    if (roots_.size() != expected_root_count(family_, rank_))
        throw ConsistencyError(name() + ": root count " + std::to_string(roots_.size()) +
                               " does not match the closed form " +
                               std::to_string(expected_root_count(family_, rank_)));
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        const Root& r = roots_[i];
        bool nonneg = std::all_of(r.coords.begin(), r.coords.end(), [](int x) { return x >= 0; });
        bool nonpos = std::all_of(r.coords.begin(), r.coords.end(), [](int x) { return x <= 0; });
        if (!nonneg && !nonpos)
            throw ConsistencyError(name() + ": mixed-sign root coordinates");
        int ni = negative_of(i);
        if (ni < 0 || roots_[ni].height != -r.height || roots_[ni].is_long != r.is_long)
            throw ConsistencyError(name() + ": negation is not an involution on the root list");
    }
    if (!two_lengths_) {
        for (const Root& r : roots_)
            if (!r.is_long) throw ConsistencyError(name() + ": short root in a simply laced system");
    }
}

std::string RootSystem::name() const {
    if (family_ == Family::E6 || family_ == Family::E7) return family_name(family_);
    return family_name(family_) + std::to_string(rank_);
}

int RootSystem::root_index(const std::vector<int>& coords) const {
    auto it = index_of_.find(coords);
    return it == index_of_.end() ? -1 : it->second;
}

int RootSystem::negative_of(std::size_t idx) const {
    std::vector<int> neg = roots_[idx].coords;
    for (int& x : neg) x = -x;
    return root_index(neg);
}

Weight RootSystem::fundamental_weight(int i) const {
    Weight w = zero_weight();
    w.coords[i] = 1;
    return w;
}

Weight RootSystem::rho() const { return Weight{IntVec(rank_, Int(1))}; }

Weight RootSystem::add(const Weight& a, const Weight& b) const {
    Weight r = a;
    for (int i = 0; i < rank_; ++i) r.coords[i] += b.coords[i];
    return r;
}

Weight RootSystem::sub(const Weight& a, const Weight& b) const {
    Weight r = a;
    for (int i = 0; i < rank_; ++i) r.coords[i] -= b.coords[i];
    return r;
}

Weight RootSystem::negate(const Weight& a) const {
    Weight r = a;
    for (int i = 0; i < rank_; ++i) r.coords[i] = -r.coords[i];
    return r;
}

Weight RootSystem::scale(const Int& k, const Weight& a) const {
    Weight r = a;
    for (int i = 0; i < rank_; ++i) r.coords[i] *= k;
    return r;
}

Int RootSystem::pair_weight_coroot(const Weight& chi, const Root& alpha) const {
    // alpha^vee = sum_b n_b(alpha) (len2_b / len2_alpha) b^vee
    Int num = 0;
    for (int b = 0; b < rank_; ++b)
        num += Int(alpha.coords[b]) * simple_len2_[b] * chi.coords[b];
    Rat q(num, alpha.len2());
    q.canonicalize();
    return to_int(q);
}

Rat RootSystem::pair_root_coweight(const Root& alpha, const Coweight& c) const {
    Rat s = 0;
    for (int b = 0; b < rank_; ++b) s += Rat(alpha.coords[b]) * c.coords[b];
    return s;
}

Rat RootSystem::pair_weight_coweight(const Weight& chi, const Coweight& c) const {
    RatVec m = weight_in_root_basis(chi);
    Rat s = 0;
    for (int b = 0; b < rank_; ++b) s += m[b] * c.coords[b];
    return s;
}

Weight RootSystem::root_as_weight(const Root& alpha) const {
    Weight w = zero_weight();
    for (int g = 0; g < rank_; ++g) {
        Int s = 0;
        for (int b = 0; b < rank_; ++b) s += Int(cartan_[g][b]) * alpha.coords[b];
        w.coords[g] = s;
    }
    return w;
}

Coweight RootSystem::coroot(const Root& alpha) const {
    Coweight c = coweight_zero();
    for (int b = 0; b < rank_; ++b) {
        Int s = 0;
        for (int g = 0; g < rank_; ++g) s += Int(cartan_[b][g]) * alpha.coords[g];
        Rat q = Rat(s) * simple_len2_[b] / alpha.len2();
        q.canonicalize();
        if (!is_integral(q))
            throw ConsistencyError("coroot pairing <beta, alpha^vee> must be integral");
        c.coords[b] = q;
    }
    return c;
}

Coweight RootSystem::coweight_add(const Coweight& a, const Coweight& b) const {
    Coweight r = a;
    for (int i = 0; i < rank_; ++i) r.coords[i] += b.coords[i];
    return r;
}

Weight RootSystem::reflect(const Weight& chi, const Root& alpha) const {
    Int k = pair_weight_coroot(chi, alpha);
    if (k == 0) return chi;
    Weight aw = root_as_weight(alpha);
    Weight r = chi;
    for (int i = 0; i < rank_; ++i) r.coords[i] -= k * aw.coords[i];
    return r;
}

Weight RootSystem::simple_reflect(const Weight& chi, int i) const {
    // <chi, alpha_i^vee> is the i-th coordinate; alpha_i has weight
    // coordinates cartan[j][i].
    const Int& k = chi.coords[i];
    Weight r = chi;
    for (int j = 0; j < rank_; ++j) r.coords[j] -= k * cartan_[j][i];
    return r;
}

bool RootSystem::is_dominant(const Weight& chi) const {
    return std::all_of(chi.coords.begin(), chi.coords.end(), [](const Int& x) { return x >= 0; });
}

Weight RootSystem::dominant_conjugate(const Weight& chi) const {
    Weight w = chi;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rank_; ++i)
            if (w.coords[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return w;
        w = simple_reflect(w, neg);
    }
}

Weight RootSystem::antidominant_conjugate(const Weight& chi) const {
    Weight w = chi;
    for (;;) {
        int pos = -1;
        for (int i = 0; i < rank_; ++i)
            if (w.coords[i] > 0) {
                pos = i;
                break;
            }
        if (pos < 0) return w;
        w = simple_reflect(w, pos);
    }
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& chi) const {
    std::set<IntVec> seen;
    std::deque<Weight> queue{chi};
    seen.insert(chi.coords);
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            Weight r = simple_reflect(w, i);
            if (seen.insert(r.coords).second) queue.push_back(r);
        }
    }
    std::vector<Weight> orbit;
    orbit.reserve(seen.size());
    for (const auto& c : seen) orbit.push_back(Weight{c});
    return orbit;
}

RatVec RootSystem::weight_in_root_basis(const Weight& chi) const {
    RatVec m(rank_, Rat(0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) m[i] += inverse_cartan_.at(i, j) * Rat(chi.coords[j]);
    return m;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
    // (a, b) = sum_b m_b(a) d_b <b, beta^vee> with d_beta = len2_beta / 2
    RatVec m = weight_in_root_basis(a);
    Rat s = 0;
    for (int i = 0; i < rank_; ++i) s += m[i] * Rat(simple_len2_[i], 2) * Rat(b.coords[i]);
    return s;
}

Root RootSystem::highest_root(const std::vector<int>& subset) const {
    if (subset.empty()) throw ArgError("highest_root: empty subset of simple roots");
    std::vector<bool> in(rank_, false);
    for (int i : subset) in[i] = true;

    std::vector<const Root*> sub;
    for (const Root& r : roots_) {
        if (!r.is_positive()) continue;
        bool supported = true;
        for (int b = 0; b < rank_ && supported; ++b)
            if (r.coords[b] != 0 && !in[b]) supported = false;
        if (supported) sub.push_back(&r);
    }
    if (sub.empty()) throw ConsistencyError("highest_root: empty subsystem");

    const Root* top = sub.front();
    for (const Root* r : sub)
        if (r->height > top->height || (r->height == top->height && r->coords > top->coords))
            top = r;
    // The subsystem must have a unique maximum (it does when the subset is
    // connected); verify domination coordinate-wise.
    for (const Root* r : sub)
        for (int b = 0; b < rank_; ++b)
            if (top->coords[b] < r->coords[b])
                throw ConsistencyError("highest_root: no unique maximal root (disconnected subset?)");
    return *top;
}

Root RootSystem::highest_root() const {
    std::vector<int> all(rank_);
    std::iota(all.begin(), all.end(), 0);
    return highest_root(all);
}

} // namespace comin
