#include "group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace brc {

namespace {

bool is_power_of(uint64_t n, uint64_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

uint64_t p_part(uint64_t n, uint64_t p) {
    uint64_t out = 1;
    while (n % p == 0) {
        n /= p;
        out *= p;
    }
    return out;
}

}  // namespace

struct Group::Body {
    mutable std::recursive_mutex mu;

    bool materialized = false;
    std::vector<Element> elements;
    std::unordered_map<uint64_t, uint32_t> first_by_hash;
    std::vector<int32_t> next_same_hash;

    bool classed = false;
    std::vector<ConjClass> classes;
    std::vector<uint32_t> class_of;

    bool cayley_built = false;
    std::vector<uint32_t> cayley;

    std::optional<uint32_t> find(const Element& e) const {
        auto it = first_by_hash.find(e.hash());
        if (it == first_by_hash.end()) return std::nullopt;
        int32_t i = int32_t(it->second);
        while (i >= 0) {
            if (elements[i] == e) return uint32_t(i);
            i = next_same_hash[i];
        }
        return std::nullopt;
    }

    // Returns the index; inserts if absent.
    std::pair<uint32_t, bool> insert(Element e) {
        uint64_t h = e.hash();
        auto it = first_by_hash.find(h);
        if (it != first_by_hash.end()) {
            int32_t i = int32_t(it->second);
            int32_t last = i;
            while (i >= 0) {
                if (elements[i] == e) return {uint32_t(i), false};
                last = i;
                i = next_same_hash[i];
            }
            uint32_t idx = uint32_t(elements.size());
            elements.push_back(std::move(e));
            next_same_hash.push_back(-1);
            next_same_hash[last] = int32_t(idx);
            return {idx, true};
        }
        uint32_t idx = uint32_t(elements.size());
        elements.push_back(std::move(e));
        next_same_hash.push_back(-1);
        first_by_hash.emplace(h, idx);
        return {idx, true};
    }
};

Group::Group(std::vector<Element> generators, std::string label, uint64_t cap)
    : body_(std::make_shared<Body>()), gens_(std::move(generators)), label_(std::move(label)),
      cap_(std::min(cap, kEngineCap)) {
    if (gens_.empty()) throw std::invalid_argument("group needs at least one generator");
    identity_ = gens_[0] * gens_[0].inverse();
}

void Group::materialize() const {
    std::lock_guard<std::recursive_mutex> lock(body_->mu);
    if (body_->materialized) return;
    Body& b = *body_;
    b.insert(identity_);
    for (const Element& g : gens_) b.insert(g);
    for (uint32_t i = 0; i < b.elements.size(); ++i) {
        for (const Element& g : gens_) {
            Element prod = b.elements[i] * g;
            b.insert(std::move(prod));
            if (b.elements.size() > cap_)
                throw CapExceeded(b.elements.size(), cap_);
        }
    }
    b.materialized = true;
}

uint64_t Group::order() const {
    materialize();
    return body_->elements.size();
}

const std::vector<Element>& Group::elements() const {
    materialize();
    return body_->elements;
}

bool Group::contains(const Element& e) const { return index_of(e).has_value(); }

std::optional<uint32_t> Group::index_of(const Element& e) const {
    materialize();
    return body_->find(e);
}

void Group::materialize_classes() const {
    materialize();
    std::lock_guard<std::recursive_mutex> lock(body_->mu);
    Body& b = *body_;
    if (b.classed) return;

    std::vector<Element> gen_invs;
    gen_invs.reserve(gens_.size());
    for (const Element& g : gens_) gen_invs.push_back(g.inverse());

    const uint32_t n = uint32_t(b.elements.size());
    b.class_of.assign(n, UINT32_MAX);
    for (uint32_t i = 0; i < n; ++i) {
        if (b.class_of[i] != UINT32_MAX) continue;
        uint32_t cid = uint32_t(b.classes.size());
        std::vector<uint32_t> frontier{i};
        b.class_of[i] = cid;
        uint32_t least = i;
        uint64_t size = 1;
        while (!frontier.empty()) {
            std::vector<uint32_t> next;
            for (uint32_t x : frontier) {
                for (size_t gi = 0; gi < gens_.size(); ++gi) {
                    Element c = gen_invs[gi] * b.elements[x] * gens_[gi];
                    uint32_t ci = *b.find(c);
                    if (b.class_of[ci] == UINT32_MAX) {
                        b.class_of[ci] = cid;
                        ++size;
                        next.push_back(ci);
                        if (b.elements[ci] < b.elements[least]) least = ci;
                    }
                }
            }
            frontier.swap(next);
        }
        ConjClass cc;
        cc.rep = least;
        cc.size = size;
        cc.order = b.elements[least].order();
        b.classes.push_back(cc);
    }
    b.classed = true;
}

const std::vector<ConjClass>& Group::classes() const {
    materialize_classes();
    return body_->classes;
}

uint32_t Group::class_of(uint32_t element_index) const {
    materialize_classes();
    return body_->class_of[element_index];
}

bool Group::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
    return true;
}

bool Group::is_p_group(uint64_t p) const { return is_power_of(order(), p); }

uint64_t Group::exponent() const {
    uint64_t e = 1;
    for (const ConjClass& c : classes()) e = std::lcm(e, c.order);
    return e;
}

Group Group::subgroup(std::vector<Element> S, std::string label) const {
    for (const Element& s : S)
        if (!contains(s)) throw std::invalid_argument("subgroup generator not in parent group");
    if (S.empty()) S.push_back(identity_);
    Group H(std::move(S), std::move(label));
    if (order() % H.order() != 0)
        throw std::logic_error("Lagrange violation in subgroup closure");
    return H;
}

Group Group::normal_closure(std::vector<Element> S) const {
    if (S.empty()) S.push_back(identity_);
    for (;;) {
        Group N = subgroup(S);
        bool grew = false;
        for (const Element& x : N.elements()) {
            for (const Element& g : gens_) {
                Element c = x.conj(g);
                if (!N.contains(c)) {
                    S.push_back(c);
                    grew = true;
                }
            }
            if (grew) break;
        }
        if (!grew) return N;
    }
}

Group Group::derived_subgroup() const {
    std::vector<Element> comms;
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = 0; j < gens_.size(); ++j) {
            if (i == j) continue;
            Element c = gens_[i].inverse() * gens_[j].inverse() * gens_[i] * gens_[j];
            if (!c.is_identity()) comms.push_back(std::move(c));
        }
    Group D = normal_closure(std::move(comms));
    if (!D.is_normal_in_parent(*this)) throw std::logic_error("derived subgroup not normal");
    return D;
}

Group Group::p_core(uint64_t p) const {
    const uint64_t pp = p_part(order(), p);
    std::vector<Element> kept;
    for (const ConjClass& c : classes()) {
        if (c.order == 1 || !is_power_of(c.order, p)) continue;
        const Element& x = element(c.rep);
        // <x^G> must stay a p-group; bail out as soon as it outgrows |G|_p.
        std::vector<Element> S{x};
        bool pgroup = true;
        try {
            for (;;) {
                Group N(S, "", pp);
                if (!is_power_of(N.order(), p)) {
                    pgroup = false;
                    break;
                }
                bool grew = false;
                for (const Element& y : N.elements()) {
                    for (const Element& g : gens_) {
                        Element cy = y.conj(g);
                        if (!N.contains(cy)) {
                            S.push_back(cy);
                            grew = true;
                        }
                    }
                    if (grew) break;
                }
                if (!grew) break;
            }
        } catch (const CapExceeded&) {
            pgroup = false;
        }
        if (pgroup) kept.push_back(x);
    }
    if (kept.empty()) return subgroup({identity_}, "O_" + std::to_string(p));
    Group core = normal_closure(kept);
    if (!is_power_of(core.order(), p)) throw std::logic_error("p-core closure is not a p-group");
    return core;
}

Group Group::center() const {
    std::vector<Element> z;
    for (const Element& x : elements()) {
        bool central = true;
        for (const Element& g : gens_)
            if (!(x * g == g * x)) {
                central = false;
                break;
            }
        if (central) z.push_back(x);
    }
    return subgroup(std::move(z), "Z");
}

Group Group::sylow_subgroup(uint64_t p) const {
    if (order() > kSylowCap) throw CapExceeded(order(), kSylowCap);
    const uint64_t target = p_part(order(), p);
    if (target == 1) return subgroup({identity_});

    auto p_element = [&](const Element& g) {
        // g has p-power order iff g^(p^t) = 1 for p^t = |G|_p
        return element_pow(g, target).is_identity();
    };

    // least p-element in enumeration order seeds the chain
    Group P = subgroup({identity_});
    for (const Element& g : elements()) {
        if (!g.is_identity() && p_element(g)) {
            P = subgroup({g});
            break;
        }
    }
    while (P.order() < target) {
        bool extended = false;
        for (const Element& g : elements()) {
            if (P.contains(g) || !p_element(g)) continue;
            bool normalizes = true;
            for (const Element& h : P.generators())
                if (!P.contains(h.conj(g))) {
                    normalizes = false;
                    break;
                }
            if (!normalizes) continue;
            std::vector<Element> gens = P.generators();
            gens.push_back(g);
            P = subgroup(std::move(gens));
            extended = true;
            break;
        }
        if (!extended) throw std::logic_error("sylow growth stalled");  // cannot happen
    }
    return P;
}

bool Group::is_normal_in_parent(const Group& parent) const {
    for (const Element& g : parent.generators())
        for (const Element& h : gens_)
            if (!contains(h.conj(g))) return false;
    return true;
}

const std::vector<uint32_t>& Group::cayley_table() const {
    materialize();
    std::lock_guard<std::recursive_mutex> lock(body_->mu);
    Body& b = *body_;
    if (b.cayley_built) return b.cayley;
    const uint64_t n = b.elements.size();
    if (n > 4096) throw CapExceeded(n, 4096);
    b.cayley.assign(n * n, 0);
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j)
            b.cayley[i * n + j] = *b.find(b.elements[i] * b.elements[j]);
    b.cayley_built = true;
    return b.cayley;
}

std::vector<Group> Group::all_subgroups() const {
    if (order() > kSubgroupsCap) throw CapExceeded(order(), kSubgroupsCap);
    const uint32_t n = uint32_t(order());
    const std::vector<uint32_t>& mul = cayley_table();

    // subgroups as sorted index sets plus a small generating list
    struct Sub {
        std::vector<uint32_t> members;
        std::vector<uint32_t> gens;
    };
    auto close = [&](std::vector<uint32_t> gens) {
        std::vector<bool> in(n, false);
        std::vector<uint32_t> mem{0};
        in[0] = true;
        for (uint32_t g : gens)
            if (!in[g]) {
                in[g] = true;
                mem.push_back(g);
            }
        for (size_t i = 0; i < mem.size(); ++i)
            for (uint32_t g : gens) {
                uint32_t x = mul[mem[i] * n + g];
                if (!in[x]) {
                    in[x] = true;
                    mem.push_back(x);
                }
            }
        std::sort(mem.begin(), mem.end());
        return Sub{std::move(mem), std::move(gens)};
    };

    std::map<std::vector<uint32_t>, size_t> seen;
    std::vector<Sub> subs;
    auto add = [&](Sub s) {
        auto it = seen.find(s.members);
        if (it != seen.end()) return false;
        seen.emplace(s.members, subs.size());
        subs.push_back(std::move(s));
        return true;
    };

    add(close({0}));
    for (uint32_t i = 1; i < n; ++i) add(close({i}));

    bool grew = true;
    while (grew) {
        grew = false;
        size_t count = subs.size();
        for (size_t a = 0; a < count; ++a) {
            for (size_t b = a + 1; b < count; ++b) {
                // skip pairs where one contains the other
                if (std::includes(subs[a].members.begin(), subs[a].members.end(),
                                  subs[b].members.begin(), subs[b].members.end()) ||
                    std::includes(subs[b].members.begin(), subs[b].members.end(),
                                  subs[a].members.begin(), subs[a].members.end()))
                    continue;
                std::vector<uint32_t> g = subs[a].gens;
                g.insert(g.end(), subs[b].gens.begin(), subs[b].gens.end());
                if (add(close(std::move(g)))) grew = true;
            }
        }
    }

    std::vector<Group> out;
    out.reserve(subs.size());
    for (const Sub& s : subs) {
        std::vector<Element> gens;
        for (uint32_t gi : s.gens) gens.push_back(element(gi));
        if (gens.empty()) gens.push_back(identity_);
        out.push_back(subgroup(std::move(gens)));
    }
    return out;
}

std::vector<uint64_t> Group::p_regular_orders(uint64_t p) const {
    std::vector<uint64_t> out;
    for (const ConjClass& c : classes())
        if (c.order % p != 0) out.push_back(c.order);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(TwoGroupType t) {
    switch (t) {
        case TwoGroupType::Cyclic: return "cyclic";
        case TwoGroupType::Dihedral: return "dihedral";
        case TwoGroupType::Semidihedral: return "semidihedral";
        case TwoGroupType::Quaternion: return "quaternion";
        case TwoGroupType::KleinLike: return "klein-like";
        case TwoGroupType::Other: return "other";
    }
    return "?";
}

TwoGroupType recognize_2group_type(const Group& P) {
    const uint64_t n = P.order();
    if (n < 4 || !is_power_of(n, 2))
        throw std::invalid_argument("recognizer needs a 2-group of order >= 4");

    uint64_t involutions = 0;
    uint64_t max_order = 1;
    for (const ConjClass& c : P.classes()) {
        if (c.order == 2) involutions += c.size;
        max_order = std::max(max_order, c.order);
    }

    if (max_order == n) return TwoGroupType::Cyclic;
    if (involutions == 1) return TwoGroupType::Quaternion;
    if (max_order == 2) return TwoGroupType::KleinLike;

    // the remaining shapes need a cyclic subgroup of index 2
    if (max_order == n / 2 && n >= 8) {
        const Element* c0 = nullptr;
        for (const Element& x : P.elements())
            if (x.order() == n / 2) {
                c0 = &x;
                break;
            }
        if (c0) {
            Group C = P.subgroup({*c0});
            Element cinv = c0->inverse();
            Element ctwist = element_pow(*c0, n / 4 - 1);  // c^(2^(n-2)-1)
            for (const Element& s : P.elements()) {
                if (C.contains(s) || !(s * s).is_identity()) continue;
                Element conj = c0->conj(s);
                if (conj == cinv && involutions == n / 2 + 1) return TwoGroupType::Dihedral;
                if (n >= 16 && conj == ctwist && involutions == n / 4 + 1)
                    return TwoGroupType::Semidihedral;
            }
        }
    }
    return TwoGroupType::Other;
}

Group quotient_group(const Group& G, const Group& N) {
    if (!N.is_normal_in_parent(G)) throw std::invalid_argument("quotient by non-normal subgroup");
    const uint64_t n = G.order();
    const uint64_t m = N.order();
    const uint64_t idx = n / m;

    std::vector<uint32_t> coset_of(n, UINT32_MAX);
    std::vector<uint32_t> reps;
    for (uint32_t i = 0; i < n; ++i) {
        if (coset_of[i] != UINT32_MAX) continue;
        uint32_t cid = uint32_t(reps.size());
        reps.push_back(i);
        for (const Element& x : N.elements()) {
            uint32_t j = *G.index_of(x * G.element(i));
            coset_of[j] = cid;
        }
    }
    if (reps.size() != idx) throw std::logic_error("coset count mismatch");

    std::vector<Element> pgens;
    for (const Element& g : G.generators()) {
        std::vector<uint32_t> img(idx);
        for (uint32_t c = 0; c < idx; ++c)
            img[c] = coset_of[*G.index_of(G.element(reps[c]) * g)];
        pgens.push_back(Element::perm(std::move(img)));
    }
    return Group(std::move(pgens), G.label() + "/N");
}

Group regular_representation(const Group& G) {
    const uint64_t n = G.order();
    std::vector<Element> pgens;
    for (const Element& g : G.generators()) {
        std::vector<uint32_t> img(n);
        for (uint32_t i = 0; i < n; ++i) img[i] = *G.index_of(G.element(i) * g);
        pgens.push_back(Element::perm(std::move(img)));
    }
    return Group(std::move(pgens), G.label());
}

Group perm_direct_product(const Group& A, const Group& B, std::string label) {
    uint32_t da = A.generators()[0].degree();
    uint32_t db = B.generators()[0].degree();
    std::vector<Element> gens;
    for (const Element& g : A.generators()) {
        std::vector<uint32_t> img(da + db);
        for (uint32_t i = 0; i < da; ++i) img[i] = g.images()[i];
        for (uint32_t i = 0; i < db; ++i) img[da + i] = da + i;
        gens.push_back(Element::perm(std::move(img)));
    }
    for (const Element& g : B.generators()) {
        std::vector<uint32_t> img(da + db);
        for (uint32_t i = 0; i < da; ++i) img[i] = i;
        for (uint32_t i = 0; i < db; ++i) img[da + i] = da + g.images()[i];
        gens.push_back(Element::perm(std::move(img)));
    }
    return Group(std::move(gens), std::move(label));
}

namespace {

// Greedy generating sequence: repeatedly adjoin the first element
// outside the running closure.
std::vector<uint32_t> generating_sequence(const Group& G) {
    std::vector<uint32_t> gens;
    std::vector<Element> chosen;
    const uint64_t n = G.order();
    uint64_t have = 1;
    for (uint32_t i = 1; i < n && have < n; ++i) {
        const Element& x = G.element(i);
        if (!chosen.empty()) {
            Group H = G.subgroup(chosen);
            if (H.contains(x)) continue;
            have = H.order();
        }
        chosen.push_back(x);
        gens.push_back(i);
        have = G.subgroup(chosen).order();
    }
    return gens;
}

// Extends a_i -> b_i to a homomorphism on <a_1..a_k> by closure,
// detecting conflicts. Returns false on conflict; sets |image|.
bool try_partial_map(const Group& A, const Group& B, const std::vector<uint32_t>& agens,
                     const std::vector<uint32_t>& bimgs, uint64_t* closure_size,
                     uint64_t* image_size) {
    const std::vector<uint32_t>& amul = A.cayley_table();
    const std::vector<uint32_t>& bmul = B.cayley_table();
    const uint64_t na = A.order(), nb = B.order();
    std::vector<int32_t> img(na, -1);
    img[0] = 0;  // identity to identity; index 0 is the identity by construction
    std::vector<uint32_t> frontier{0};
    std::vector<uint32_t> members{0};
    while (!frontier.empty()) {
        std::vector<uint32_t> next;
        for (uint32_t x : frontier) {
            for (size_t gi = 0; gi < agens.size(); ++gi) {
                uint32_t xa = amul[x * na + agens[gi]];
                uint32_t yb = bmul[uint32_t(img[x]) * nb + bimgs[gi]];
                if (img[xa] < 0) {
                    img[xa] = int32_t(yb);
                    next.push_back(xa);
                    members.push_back(xa);
                } else if (img[xa] != int32_t(yb)) {
                    return false;
                }
            }
        }
        frontier.swap(next);
    }
    std::vector<bool> hit(nb, false);
    uint64_t distinct = 0;
    for (uint32_t m : members)
        if (!hit[img[m]]) {
            hit[img[m]] = true;
            ++distinct;
        }
    *closure_size = members.size();
    *image_size = distinct;
    return true;
}

bool iso_dfs(const Group& A, const Group& B, const std::vector<uint32_t>& agens,
             const std::vector<uint64_t>& aorders, std::vector<uint32_t>& bimgs, size_t depth) {
    if (depth == agens.size()) {
        uint64_t cs = 0, is = 0;
        if (!try_partial_map(A, B, agens, bimgs, &cs, &is)) return false;
        return cs == A.order() && is == cs;
    }
    const uint64_t nb = B.order();
    for (uint32_t cand = 0; cand < nb; ++cand) {
        if (B.element(cand).order() != aorders[depth]) continue;
        bimgs.push_back(cand);
        uint64_t cs = 0, is = 0;
        bool ok = try_partial_map(A, B,
                                  std::vector<uint32_t>(agens.begin(), agens.begin() + depth + 1),
                                  bimgs, &cs, &is);
        if (ok && is == cs && iso_dfs(A, B, agens, aorders, bimgs, depth + 1)) return true;
        bimgs.pop_back();
    }
    return false;
}

}  // namespace

bool isomorphic_brute(const Group& A, const Group& B) {
    if (A.order() != B.order()) return false;
    if (A.order() > 256) throw CapExceeded(A.order(), 256);

    // order profiles must match
    std::map<uint64_t, uint64_t> pa, pb;
    for (const ConjClass& c : A.classes()) pa[c.order] += c.size;
    for (const ConjClass& c : B.classes()) pb[c.order] += c.size;
    if (pa != pb) return false;

    std::vector<uint32_t> agens = generating_sequence(A);
    std::vector<uint64_t> aorders;
    for (uint32_t g : agens) aorders.push_back(A.element(g).order());
    std::vector<uint32_t> bimgs;
    return iso_dfs(A, B, agens, aorders, bimgs, 0);
}

std::vector<Element> intersect_elements(const Group& A, const Group& B) {
    const Group& small = A.order() <= B.order() ? A : B;
    const Group& big = A.order() <= B.order() ? B : A;
    std::vector<Element> out;
    for (const Element& x : small.elements())
        if (big.contains(x)) out.push_back(x);
    return out;
}

}  // namespace brc
