#include "element.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brc {

std::shared_ptr<const TupleLaw> TupleLaw::heisenberg(FieldRef f) {
    if (f->characteristic() == 2)
        throw std::invalid_argument("heisenberg law requires odd characteristic");
    auto law = std::make_shared<TupleLaw>();
    law->kind = Kind::Heisenberg;
    law->field = std::move(f);
    law->half = law->field->inv(uint32_t(2 % law->field->characteristic()));
    return law;
}

std::shared_ptr<const TupleLaw> TupleLaw::suzuki_b(FieldRef f, uint32_t theta_power, uint32_t eps) {
    if (f->characteristic() != 2)
        throw std::invalid_argument("suzuki law requires characteristic 2");
    auto law = std::make_shared<TupleLaw>();
    law->kind = Kind::SuzukiB;
    law->field = std::move(f);
    law->theta_power = theta_power;
    law->eps = eps;
    return law;
}

void TupleLaw::mul(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
    const FieldSpec& F = *field;
    if (kind == Kind::Heisenberg) {
        // (v,c)(v',c') = (v+v', c+c' + (v1 v2' - v2 v1')/2)
        uint32_t om = F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]));
        out[0] = F.add(a[0], b[0]);
        out[1] = F.add(a[1], b[1]);
        out[2] = F.add(F.add(a[2], b[2]), F.mul(om, half));
    } else {
        // (a,b,c)(d,e,f) = (a+d, b+e, c+f + a d^T + b e^T + eps a e^T)
        uint32_t dT = F.pow(b[0], theta_power);
        uint32_t eT = F.pow(b[1], theta_power);
        uint32_t cross = F.add(F.add(F.mul(a[0], dT), F.mul(a[1], eT)), F.mul(eps, F.mul(a[0], eT)));
        out[0] = F.add(a[0], b[0]);
        out[1] = F.add(a[1], b[1]);
        out[2] = F.add(F.add(a[2], b[2]), cross);
    }
}

void TupleLaw::invert(const uint32_t* a, uint32_t* out) const {
    const FieldSpec& F = *field;
    if (kind == Kind::Heisenberg) {
        out[0] = F.neg(a[0]);
        out[1] = F.neg(a[1]);
        out[2] = F.neg(a[2]);
    } else {
        // characteristic 2: (a,b,c)^-1 = (a, b, c + a a^T + b b^T + eps a b^T)
        uint32_t aT = F.pow(a[0], theta_power);
        uint32_t bT = F.pow(a[1], theta_power);
        out[0] = a[0];
        out[1] = a[1];
        out[2] = F.add(a[2], F.add(F.add(F.mul(a[0], aT), F.mul(a[1], bT)), F.mul(eps, F.mul(a[0], bT))));
    }
}

Element Element::perm(std::vector<uint32_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (uint32_t v : images) {
        if (v >= images.size() || seen[v])
            throw std::invalid_argument("permutation image list is not a bijection");
        seen[v] = true;
    }
    Element e;
    e.kind_ = ElementKind::Perm;
    e.data_ = std::move(images);
    return e;
}

Element Element::perm_identity(uint32_t degree) {
    std::vector<uint32_t> img(degree);
    for (uint32_t i = 0; i < degree; ++i) img[i] = i;
    Element e;
    e.kind_ = ElementKind::Perm;
    e.data_ = std::move(img);
    return e;
}

Element Element::mat(FieldRef f, uint32_t n, std::vector<uint32_t> entries) {
    if (entries.size() != size_t(n) * n) throw std::invalid_argument("matrix entry count mismatch");
    if (!mat_invertible(f, entries, n)) throw std::invalid_argument("matrix element is singular");
    return mat_unchecked(std::move(f), n, std::move(entries));
}

Element Element::mat_unchecked(FieldRef f, uint32_t n, std::vector<uint32_t> entries) {
    Element e;
    e.kind_ = ElementKind::Mat;
    e.field_ = std::move(f);
    e.dim_ = n;
    e.data_ = std::move(entries);
    return e;
}

Element Element::mat_identity(FieldRef f, uint32_t n) {
    std::vector<uint32_t> id(size_t(n) * n, 0);
    for (uint32_t i = 0; i < n; ++i) id[i * n + i] = 1;
    return mat_unchecked(std::move(f), n, std::move(id));
}

Element Element::tuple(std::shared_ptr<const TupleLaw> law, std::array<uint32_t, 3> coords) {
    Element e;
    e.kind_ = ElementKind::Tuple;
    e.law_ = std::move(law);
    e.data_.assign(coords.begin(), coords.end());
    return e;
}

Element Element::pair(std::shared_ptr<const PairAction> action, Element kernel, Element actor) {
    Element e;
    e.kind_ = ElementKind::Pair;
    e.action_ = std::move(action);
    e.kernel_ = std::make_shared<Element>(std::move(kernel));
    e.actor_ = std::make_shared<Element>(std::move(actor));
    return e;
}

Element Element::operator*(const Element& o) const {
    if (kind_ != o.kind_) throw std::invalid_argument("element kind mismatch in product");
    switch (kind_) {
        case ElementKind::Perm: {
            if (data_.size() != o.data_.size())
                throw std::invalid_argument("permutation degree mismatch");
            Element e;
            e.kind_ = ElementKind::Perm;
            e.data_.resize(data_.size());
            for (size_t i = 0; i < data_.size(); ++i) e.data_[i] = o.data_[data_[i]];
            return e;
        }
        case ElementKind::Mat: {
            if (field_ != o.field_ || dim_ != o.dim_)
                throw std::invalid_argument("matrix context mismatch");
            return mat_unchecked(field_, dim_, mat_mul(field_, data_, o.data_, dim_));
        }
        case ElementKind::Tuple: {
            if (law_ != o.law_) throw std::invalid_argument("tuple law mismatch");
            Element e;
            e.kind_ = ElementKind::Tuple;
            e.law_ = law_;
            e.data_.resize(3);
            law_->mul(data_.data(), o.data_.data(), e.data_.data());
            return e;
        }
        case ElementKind::Pair: {
            if (action_ != o.action_) throw std::invalid_argument("pair action mismatch");
            Element k = *kernel_ * action_->act(*actor_, *o.kernel_);
            Element h = *actor_ * *o.actor_;
            return pair(action_, std::move(k), std::move(h));
        }
    }
    throw std::logic_error("unreachable");
}

Element Element::inverse() const {
    switch (kind_) {
        case ElementKind::Perm: {
            Element e;
            e.kind_ = ElementKind::Perm;
            e.data_.resize(data_.size());
            for (size_t i = 0; i < data_.size(); ++i) e.data_[data_[i]] = uint32_t(i);
            return e;
        }
        case ElementKind::Mat:
            return mat_unchecked(field_, dim_, mat_inverse(field_, data_, dim_));
        case ElementKind::Tuple: {
            Element e;
            e.kind_ = ElementKind::Tuple;
            e.law_ = law_;
            e.data_.resize(3);
            law_->invert(data_.data(), e.data_.data());
            return e;
        }
        case ElementKind::Pair: {
            Element hi = actor_->inverse();
            Element ki = action_->act(hi, kernel_->inverse());
            return pair(action_, std::move(ki), std::move(hi));
        }
    }
    throw std::logic_error("unreachable");
}

Element Element::conj(const Element& g) const { return g.inverse() * *this * g; }

bool Element::is_identity() const {
    switch (kind_) {
        case ElementKind::Perm:
            for (size_t i = 0; i < data_.size(); ++i)
                if (data_[i] != i) return false;
            return true;
        case ElementKind::Mat:
            for (uint32_t r = 0; r < dim_; ++r)
                for (uint32_t c = 0; c < dim_; ++c)
                    if (data_[r * dim_ + c] != (r == c ? 1u : 0u)) return false;
            return true;
        case ElementKind::Tuple:
            return data_[0] == 0 && data_[1] == 0 && data_[2] == 0;
        case ElementKind::Pair:
            return kernel_->is_identity() && actor_->is_identity();
    }
    return false;
}

uint64_t Element::order(uint64_t cap) const {
    if (kind_ == ElementKind::Perm) {
        // lcm of cycle lengths
        std::vector<bool> seen(data_.size(), false);
        uint64_t ord = 1;
        for (size_t i = 0; i < data_.size(); ++i) {
            if (seen[i]) continue;
            uint64_t len = 0;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = data_[j];
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }
    Element acc = *this;
    uint64_t n = 1;
    while (!acc.is_identity()) {
        acc = acc * *this;
        if (++n > cap) throw std::runtime_error("element order exceeds cap");
    }
    return n;
}

bool Element::operator==(const Element& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case ElementKind::Perm:
            return data_ == o.data_;
        case ElementKind::Mat:
            return field_ == o.field_ && dim_ == o.dim_ && data_ == o.data_;
        case ElementKind::Tuple:
            return law_ == o.law_ && data_ == o.data_;
        case ElementKind::Pair:
            return action_ == o.action_ && *kernel_ == *o.kernel_ && *actor_ == *o.actor_;
    }
    return false;
}

bool Element::operator<(const Element& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (kind_ == ElementKind::Pair) {
        if (*kernel_ < *o.kernel_) return true;
        if (*o.kernel_ < *kernel_) return false;
        return *actor_ < *o.actor_;
    }
    return data_ < o.data_;
}

uint64_t Element::hash() const {
    uint64_t h = 1469598103934665603ull ^ uint64_t(kind_);
    auto mix = [&h](uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    if (kind_ == ElementKind::Pair) {
        mix(kernel_->hash());
        mix(actor_->hash());
        return h;
    }
    for (uint32_t v : data_) mix(v);
    return h;
}

std::string Element::str() const {
    std::ostringstream os;
    switch (kind_) {
        case ElementKind::Perm: {
            // cycle notation, 1-based
            std::vector<bool> seen(data_.size(), false);
            bool any = false;
            for (size_t i = 0; i < data_.size(); ++i) {
                if (seen[i] || data_[i] == i) continue;
                any = true;
                os << '(';
                size_t j = i;
                bool first = true;
                while (!seen[j]) {
                    seen[j] = true;
                    if (!first) os << ' ';
                    os << (j + 1);
                    first = false;
                    j = data_[j];
                }
                os << ')';
            }
            if (!any) os << "()";
            return os.str();
        }
        case ElementKind::Mat: {
            os << '[';
            for (uint32_t r = 0; r < dim_; ++r) {
                if (r) os << "; ";
                for (uint32_t c = 0; c < dim_; ++c) {
                    if (c) os << ' ';
                    os << data_[r * dim_ + c];
                }
            }
            os << ']';
            return os.str();
        }
        case ElementKind::Tuple:
            os << '(' << data_[0] << ',' << data_[1] << ',' << data_[2] << ')';
            return os.str();
        case ElementKind::Pair:
            os << '(' << kernel_->str() << " | " << actor_->str() << ')';
            return os.str();
    }
    return "?";
}

uint32_t Element::degree() const {
    if (kind_ != ElementKind::Perm) throw std::logic_error("degree() on non-permutation");
    return uint32_t(data_.size());
}

Element element_pow(const Element& g, uint64_t n) {
    Element acc = g * g.inverse();
    Element base = g;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

}  // namespace brc
