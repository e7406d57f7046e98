#include "action.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace brc {

SemilinearMap SemilinearMap::identity(FieldRef f, uint32_t d) {
    std::vector<uint32_t> id(size_t(d) * d, 0);
    for (uint32_t i = 0; i < d; ++i) id[i * d + i] = 1;
    return {std::move(f), d, std::move(id), 0};
}

SemilinearMap SemilinearMap::linear(FieldRef f, uint32_t d, std::vector<uint32_t> entries) {
    return semilinear(std::move(f), d, std::move(entries), 0);
}

SemilinearMap SemilinearMap::semilinear(FieldRef f, uint32_t d, std::vector<uint32_t> entries,
                                        uint32_t frob) {
    if (entries.size() != size_t(d) * d) throw std::invalid_argument("semilinear entry count");
    if (!mat_invertible(f, entries, d)) throw std::invalid_argument("semilinear map is singular");
    frob %= f->degree();
    return {std::move(f), d, std::move(entries), frob};
}

SemilinearMap SemilinearMap::then(const SemilinearMap& o) const {
    if (field != o.field || dim != o.dim) throw std::invalid_argument("semilinear context mismatch");
    // v^(s^e1) M1 then ^(s^e2) M2  =  v^(s^(e1+e2)) M1^(s^e2) M2
    std::vector<uint32_t> twisted(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) twisted[i] = field->frobenius(entries[i], o.frob);
    return {field, dim, mat_mul(field, twisted, o.entries, dim), (frob + o.frob) % field->degree()};
}

SemilinearMap SemilinearMap::inverse() const {
    uint32_t einv = (field->degree() - frob) % field->degree();
    std::vector<uint32_t> twisted(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) twisted[i] = field->frobenius(entries[i], einv);
    return {field, dim, mat_inverse(field, twisted, dim), einv};
}

bool SemilinearMap::is_identity() const {
    if (frob != 0) return false;
    for (uint32_t r = 0; r < dim; ++r)
        for (uint32_t c = 0; c < dim; ++c)
            if (entries[r * dim + c] != (r == c ? 1u : 0u)) return false;
    return true;
}

bool SemilinearMap::operator==(const SemilinearMap& o) const {
    return field == o.field && dim == o.dim && frob == o.frob && entries == o.entries;
}

uint64_t SemilinearMap::hash() const {
    uint64_t h = 0x9ddfea08eb382d69ull ^ frob;
    for (uint32_t v : entries) h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

void SemilinearMap::apply(const uint32_t* in, uint32_t* out) const {
    const FieldSpec& F = *field;
    for (uint32_t j = 0; j < dim; ++j) out[j] = 0;
    for (uint32_t i = 0; i < dim; ++i) {
        uint32_t vi = frob ? F.frobenius(in[i], frob) : in[i];
        if (vi == 0) continue;
        for (uint32_t j = 0; j < dim; ++j)
            out[j] = F.add(out[j], F.mul(vi, entries[i * dim + j]));
    }
}

Element SemilinearMap::to_prime_matrix() const {
    const uint64_t p = field->characteristic();
    const uint32_t k = field->degree();
    const uint32_t n = k * dim;
    FieldRef fp = FieldSpec::get(p, 1);
    if (k == 1 && frob == 0) return Element::mat(fp, n, entries);

    // block (i,j) = multiplication matrix of entries[i][j]; Frobenius
    // applied first as a block-diagonal factor.
    std::vector<uint32_t> blown(size_t(n) * n, 0);
    for (uint32_t i = 0; i < dim; ++i)
        for (uint32_t j = 0; j < dim; ++j) {
            auto block = mult_matrix(fp, field, entries[i * dim + j]);
            for (uint32_t r = 0; r < k; ++r)
                for (uint32_t c = 0; c < k; ++c)
                    blown[size_t(i * k + r) * n + (j * k + c)] = block[r * k + c];
        }
    if (frob != 0) {
        auto fb = frobenius_matrix(fp, field, frob);
        std::vector<uint32_t> fdiag(size_t(n) * n, 0);
        for (uint32_t i = 0; i < dim; ++i)
            for (uint32_t r = 0; r < k; ++r)
                for (uint32_t c = 0; c < k; ++c)
                    fdiag[size_t(i * k + r) * n + (i * k + c)] = fb[r * k + c];
        blown = mat_mul(fp, fdiag, blown, n);
    }
    return Element::mat(fp, n, std::move(blown));
}

ModuleAction::ModuleAction(FieldRef field, uint32_t dim, std::vector<SemilinearMap> gens,
                           std::string label)
    : field_(std::move(field)), dim_(dim), gens_(std::move(gens)), label_(std::move(label)),
      mu_(std::make_shared<std::mutex>()) {
    if (gens_.empty()) throw std::invalid_argument("module action needs at least one generator");
    vsize_ = 1;
    for (uint32_t i = 0; i < dim_; ++i) {
        vsize_ *= field_->size();
        if (vsize_ > kSpaceCap)
            throw CapExceeded(vsize_, kSpaceCap);
    }
    for (const SemilinearMap& g : gens_)
        if (g.field != field_ || g.dim != dim_)
            throw std::invalid_argument("action generator context mismatch");
}

std::vector<uint32_t> ModuleAction::decode(uint64_t code) const {
    std::vector<uint32_t> v(dim_);
    const uint64_t q = field_->size();
    for (uint32_t i = 0; i < dim_; ++i) {
        v[i] = uint32_t(code % q);
        code /= q;
    }
    return v;
}

uint64_t ModuleAction::encode(const std::vector<uint32_t>& v) const {
    const uint64_t q = field_->size();
    uint64_t code = 0;
    for (uint32_t i = dim_; i-- > 0;) code = code * q + v[i];
    return code;
}

uint64_t ModuleAction::apply_to_code(const SemilinearMap& m, uint64_t code) const {
    const uint64_t q = field_->size();
    uint32_t in[16], out[16];
    for (uint32_t i = 0; i < dim_; ++i) {
        in[i] = uint32_t(code % q);
        code /= q;
    }
    m.apply(in, out);
    uint64_t res = 0;
    for (uint32_t i = dim_; i-- > 0;) res = res * q + out[i];
    return res;
}

const Group& ModuleAction::h_group() const {
    std::lock_guard<std::mutex> lock(*mu_);
    if (!h_group_) {
        std::vector<Element> gens;
        gens.reserve(gens_.size());
        for (const SemilinearMap& g : gens_) gens.push_back(g.to_prime_matrix());
        h_group_ = std::make_shared<Group>(std::move(gens), label_.empty() ? "H" : label_);
    }
    return *h_group_;
}

Group ModuleAction::h_subgroup(const std::vector<SemilinearMap>& maps, std::string label) const {
    std::vector<Element> gens;
    gens.reserve(maps.size() + 1);
    for (const SemilinearMap& m : maps) gens.push_back(m.to_prime_matrix());
    if (gens.empty()) gens.push_back(h_group().identity());
    return Group(std::move(gens), std::move(label));
}

OrbitData ModuleAction::orbits_on_nonzero() const {
    OrbitData od;
    od.orbit_of.assign(vsize_, UINT32_MAX);

    std::vector<SemilinearMap> transversal;  // per point, set lazily
    transversal.resize(vsize_, SemilinearMap{});
    const SemilinearMap id = SemilinearMap::identity(field_, dim_);

    for (uint64_t start = 1; start < vsize_; ++start) {
        if (od.orbit_of[start] != UINT32_MAX) continue;
        uint32_t oid = uint32_t(od.reps.size());
        od.reps.push_back(start);
        od.orbit_of[start] = oid;
        transversal[start] = id;
        std::vector<uint64_t> frontier{start};
        uint64_t size = 1;
        while (!frontier.empty()) {
            std::vector<uint64_t> next;
            for (uint64_t x : frontier) {
                for (const SemilinearMap& g : gens_) {
                    uint64_t y = apply_to_code(g, x);
                    if (od.orbit_of[y] == UINT32_MAX) {
                        od.orbit_of[y] = oid;
                        transversal[y] = transversal[x].then(g);
                        ++size;
                        next.push_back(y);
                    }
                }
            }
            frontier.swap(next);
        }
        od.sizes.push_back(size);

        // Schreier generators of the stabilizer of the representative.
        std::vector<SemilinearMap> stab;
        std::unordered_map<uint64_t, std::vector<size_t>> seen;
        auto add_stab = [&](SemilinearMap s) {
            if (s.is_identity()) return;
            uint64_t h = s.hash();
            auto& bucket = seen[h];
            for (size_t idx : bucket)
                if (stab[idx] == s) return;
            bucket.push_back(stab.size());
            stab.push_back(std::move(s));
        };
        for (uint64_t x = 1; x < vsize_; ++x) {
            if (od.orbit_of[x] != oid) continue;
            for (const SemilinearMap& g : gens_) {
                uint64_t y = apply_to_code(g, x);
                add_stab(transversal[x].then(g).then(transversal[y].inverse()));
            }
        }
        od.stabilizer_gens.push_back(std::move(stab));
    }
    return od;
}

ModuleAction ModuleAction::dual(const std::string& label_suffix) const {
    std::vector<SemilinearMap> dgens;
    dgens.reserve(gens_.size());
    for (const SemilinearMap& g : gens_) {
        std::vector<uint32_t> minv = mat_inverse(field_, g.entries, dim_);
        std::vector<uint32_t> mt(minv.size());
        for (uint32_t r = 0; r < dim_; ++r)
            for (uint32_t c = 0; c < dim_; ++c) mt[c * dim_ + r] = minv[r * dim_ + c];
        dgens.push_back(SemilinearMap::semilinear(field_, dim_, std::move(mt), g.frob));
    }
    return ModuleAction(field_, dim_, std::move(dgens), label_ + label_suffix);
}

StructuralPredicates ModuleAction::predicates(uint64_t p) const {
    StructuralPredicates out;
    OrbitData od = orbits_on_nonzero();
    const uint64_t h = h_order();

    out.transitive_on_nonzero = od.reps.size() == 1;
    out.rank = uint32_t(od.reps.size()) + 1;
    out.frobenius = true;
    out.all_stabilizers_p_groups = true;
    for (uint64_t s : od.sizes) {
        uint64_t stab_order = h / s;
        if (stab_order != 1) out.frobenius = false;
        uint64_t m = stab_order;
        while (m % p == 0) m /= p;
        if (m != 1) out.all_stabilizers_p_groups = false;
    }
    uint64_t dord = h_group().derived_subgroup().order();
    while (dord % p == 0) dord /= p;
    out.derived_of_h_is_p_group = dord == 1;

    // Injectivity of the parametrization makes the matrix form faithful;
    // verify no nontrivial generator word of length one collapses.
    out.h_acts_faithfully = true;
    for (const SemilinearMap& g : gens_) {
        bool fixes_all = true;
        for (uint64_t v = 1; v < vsize_ && fixes_all; ++v)
            if (apply_to_code(g, v) != v) fixes_all = false;
        if (fixes_all && !g.is_identity()) out.h_acts_faithfully = false;
    }
    return out;
}

Group ModuleAction::affine_permutation_group(std::string label) const {
    const uint64_t h = h_order();
    if (vsize_ * h > Group::kEngineCap) throw CapExceeded(vsize_ * h, Group::kEngineCap);

    std::vector<Element> gens;
    // translations by the F_p-basis x^j e_i
    const uint64_t p = field_->characteristic();
    const uint32_t k = field_->degree();
    for (uint32_t i = 0; i < dim_; ++i) {
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t w = 1;
            for (uint32_t t = 0; t < j; ++t) w = uint32_t(uint64_t(w) * p);  // code of x^j
            std::vector<uint32_t> img(vsize_);
            for (uint64_t v = 0; v < vsize_; ++v) {
                auto vec = decode(v);
                vec[i] = field_->add(vec[i], w);
                img[v] = uint32_t(encode(vec));
            }
            gens.push_back(Element::perm(std::move(img)));
        }
    }
    for (const SemilinearMap& g : gens_) {
        std::vector<uint32_t> img(vsize_);
        for (uint64_t v = 0; v < vsize_; ++v) img[v] = uint32_t(apply_to_code(g, v));
        gens.push_back(Element::perm(std::move(img)));
    }
    Group G(std::move(gens), label.empty() ? ("V:" + label_) : std::move(label));
    if (G.order() != vsize_ * h)
        throw std::logic_error("affine group order mismatch: expected " +
                               std::to_string(vsize_ * h) + ", got " + std::to_string(G.order()));
    return G;
}

std::string ModuleAction::serialize() const {
    nlohmann::ordered_json j;
    std::ostringstream fd;
    fd << field_->characteristic() << '^' << field_->degree();
    j["field"] = fd.str();
    j["dim"] = dim_;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const SemilinearMap& g : gens_) {
        nlohmann::ordered_json e;
        e["matrix"] = g.entries;
        e["frobenius"] = g.frob;
        gens.push_back(e);
    }
    j["generators"] = gens;
    return j.dump();
}

uint32_t ModuleAction::commutator_space_rank() const {
    const uint64_t p = field_->characteristic();
    const uint32_t k = field_->degree();
    const uint32_t n = k * dim_;  // F_p-dimension of V
    FieldRef fp = FieldSpec::get(p, 1);

    // rows: coefficient expansions of v*g - v for v in the F_p-basis
    std::vector<std::vector<uint32_t>> rows;
    for (uint32_t i = 0; i < dim_; ++i) {
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t w = 1;
            for (uint32_t t = 0; t < j; ++t) w = uint32_t(uint64_t(w) * p);
            std::vector<uint32_t> v(dim_, 0);
            v[i] = w;
            for (const SemilinearMap& g : gens_) {
                std::vector<uint32_t> img(dim_);
                g.apply(v.data(), img.data());
                std::vector<uint32_t> row(n);
                for (uint32_t c = 0; c < dim_; ++c) {
                    uint32_t diff = field_->sub(img[c], v[c]);
                    auto digits = field_->coeffs(diff);
                    for (uint32_t t = 0; t < k; ++t) row[c * k + t] = digits[t];
                }
                rows.push_back(std::move(row));
            }
        }
    }
    // Gaussian elimination over F_p
    uint32_t rank = 0;
    std::vector<std::vector<uint32_t>> basis;
    for (auto& row : rows) {
        for (const auto& b : basis) {
            uint32_t lead = 0;
            while (lead < n && b[lead] == 0) ++lead;
            if (lead < n && row[lead] != 0) {
                uint32_t f = fp->mul(row[lead], fp->inv(b[lead]));
                for (uint32_t c = 0; c < n; ++c) row[c] = fp->sub(row[c], fp->mul(f, b[c]));
            }
        }
        bool nonzero = false;
        for (uint32_t c = 0; c < n; ++c)
            if (row[c] != 0) nonzero = true;
        if (nonzero) {
            basis.push_back(row);
            ++rank;
        }
    }
    return rank;
}

}  // namespace brc
