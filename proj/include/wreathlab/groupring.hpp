#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wreathlab/cyclotomic.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/rational.hpp"

namespace wreathlab {

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

// Direct product of cyclic groups; elements are residue vectors.
class FiniteAbelianGroup {
public:
    using Elem = std::vector<int>;

    explicit FiniteAbelianGroup(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    long order() const;
    Elem identity() const { return Elem(orders_.size(), 0); }
    bool is_identity(const Elem& e) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inverse(const Elem& a) const;
    Elem generator(size_t i) const;
    std::vector<Elem> elements() const;
    std::string elem_to_string(const Elem& e) const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.orders_ == b.orders_;
    }

private:
    std::vector<int> orders_;
};

// Element of U wr Z: a finite lamp configuration over the base group plus a
// shift. Lamps are kept sorted by index and never store the identity.
struct WreathElement {
    std::vector<std::pair<long, FiniteAbelianGroup::Elem>> lamps;
    long shift = 0;

    friend bool operator==(const WreathElement& a, const WreathElement& b) {
        return a.shift == b.shift && a.lamps == b.lamps;
    }
    friend bool operator<(const WreathElement& a, const WreathElement& b) {
        return std::tie(a.shift, a.lamps) < std::tie(b.shift, b.lamps);
    }
};

// U wr Z with the shift convention t^-1 (g_i) t = (g_{i-1}): conjugating a
// lamp at index i by t^-1 moves it to index i+1.
class WreathGroup {
public:
    using Elem = WreathElement;

    explicit WreathGroup(FiniteAbelianGroup base) : base_(std::move(base)) {}

    const FiniteAbelianGroup& base() const { return base_; }
    Elem identity() const { return {}; }
    bool is_identity(const Elem& e) const { return e.lamps.empty() && e.shift == 0; }
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inverse(const Elem& a) const;
    Elem lamp(long index, const FiniteAbelianGroup::Elem& value) const;
    Elem shift_power(long k) const;  // t^k
    std::string elem_to_string(const Elem& e) const;

    friend bool operator==(const WreathGroup& a, const WreathGroup& b) {
        return a.base_ == b.base_;
    }

private:
    FiniteAbelianGroup base_;
};

// (U wr Z) x (V wr Z).
class ProductGroup {
public:
    using Elem = std::pair<WreathElement, WreathElement>;

    ProductGroup(WreathGroup left, WreathGroup right)
        : left_(std::move(left)), right_(std::move(right)) {}

    const WreathGroup& left() const { return left_; }
    const WreathGroup& right() const { return right_; }
    Elem identity() const { return {left_.identity(), right_.identity()}; }
    bool is_identity(const Elem& e) const {
        return left_.is_identity(e.first) && right_.is_identity(e.second);
    }
    Elem mul(const Elem& a, const Elem& b) const {
        return {left_.mul(a.first, b.first), right_.mul(a.second, b.second)};
    }
    Elem inverse(const Elem& a) const {
        return {left_.inverse(a.first), right_.inverse(a.second)};
    }
    std::string elem_to_string(const Elem& e) const {
        return left_.elem_to_string(e.first) + " x " + right_.elem_to_string(e.second);
    }

    friend bool operator==(const ProductGroup& a, const ProductGroup& b) {
        return a.left_ == b.left_ && a.right_ == b.right_;
    }

private:
    WreathGroup left_, right_;
};

// ---------------------------------------------------------------------------
// Coefficients
// ---------------------------------------------------------------------------

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const CyclotomicNumber& c) { return c.is_zero(); }
inline Rational coeff_conj(const Rational& c) { return c; }
inline CyclotomicNumber coeff_conj(const CyclotomicNumber& c) { return c.conj(); }
std::string coeff_to_string(const Rational& c);
std::string coeff_to_string(const CyclotomicNumber& c);

// ---------------------------------------------------------------------------
// Group ring elements
// ---------------------------------------------------------------------------

// Finite formal sum of group elements with field coefficients. Immutable in
// spirit: all operations return new values. Zero coefficients are never kept.
template <class Group, class Coeff>
class RingElem {
public:
    using Elem = typename Group::Elem;
    using TermMap = std::map<Elem, Coeff>;

    RingElem() = default;
    explicit RingElem(std::shared_ptr<const Group> g) : group_(std::move(g)) {}

    static RingElem zero(std::shared_ptr<const Group> g) { return RingElem(std::move(g)); }

    static RingElem one(std::shared_ptr<const Group> g) {
        RingElem out(std::move(g));
        out.terms_[out.group_->identity()] = Coeff(1);
        return out;
    }

    static RingElem monomial(std::shared_ptr<const Group> g, Elem e, Coeff c) {
        RingElem out(std::move(g));
        if (!coeff_is_zero(c)) out.terms_.emplace(std::move(e), std::move(c));
        return out;
    }

    const std::shared_ptr<const Group>& group() const { return group_; }
    const TermMap& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Coeff coefficient(const Elem& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    // Coefficient of the group identity: the regularized trace.
    Coeff trace() const { return coefficient(group_->identity()); }

    void add_term(const Elem& e, const Coeff& c) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        } else if (coeff_is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    RingElem operator-() const {
        RingElem out(group_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, Coeff(0) - c);
        return out;
    }

    friend RingElem operator+(const RingElem& a, const RingElem& b) {
        a.require_same_group(b);
        RingElem out = a;
        if (!out.group_) out.group_ = b.group_;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    friend RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

    // Exact convolution product.
    friend RingElem operator*(const RingElem& a, const RingElem& b) {
        a.require_same_group(b);
        RingElem out(a.group_ ? a.group_ : b.group_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(out.group_->mul(ea, eb), ca * cb);
        return out;
    }

    RingElem scaled(const Coeff& c) const {
        RingElem out(group_);
        if (coeff_is_zero(c)) return out;
        for (const auto& [e, v] : terms_) out.add_term(e, v * c);
        return out;
    }

    // The *-involution: conjugate coefficients, invert group elements.
    RingElem star() const {
        RingElem out(group_);
        for (const auto& [e, c] : terms_) out.add_term(group_->inverse(e), coeff_conj(c));
        return out;
    }

    bool is_projection() const { return *this == star() && *this == (*this) * (*this); }

    friend bool operator==(const RingElem& a, const RingElem& b) {
        a.require_same_group(b);
        return a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + coeff_to_string(c) + ")*" + group_->elem_to_string(e);
        }
        return out;
    }

private:
    void require_same_group(const RingElem& other) const {
        if (!group_ || !other.group_) {
            if (!terms_.empty() && !other.terms_.empty())
                throw invalid_input("group ring elements without a common group");
            return;
        }
        if (!(*group_ == *other.group_))
            throw invalid_input("group ring elements over different groups");
    }

    std::shared_ptr<const Group> group_;
    TermMap terms_;
};

using FagRingQ = RingElem<FiniteAbelianGroup, Rational>;
using WreathRingQ = RingElem<WreathGroup, Rational>;
using WreathRingC = RingElem<WreathGroup, CyclotomicNumber>;
using ProductRingQ = RingElem<ProductGroup, Rational>;
using ProductRingC = RingElem<ProductGroup, CyclotomicNumber>;

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

// avg(U) = (1/|U|) sum of all elements of U; a projection with trace 1/|U|.
FagRingQ average_projection(const std::shared_ptr<const FiniteAbelianGroup>& U);

// Lift an element of Q[U] to Q[U wr Z] through lamps at index 0.
WreathRingQ embed_in_wreath(const std::shared_ptr<const WreathGroup>& W, const FagRingQ& a);

// Rational -> cyclotomic coefficient promotion (the constant embedding).
WreathRingC promote(const WreathRingQ& a);
ProductRingC promote(const ProductRingQ& a);

// Embed every cyclotomic coefficient into Q(zeta_M).
WreathRingC embed_coefficients(const WreathRingC& a, long M);
ProductRingC embed_coefficients(const ProductRingC& a, long M);

// Product a.b inside the product group ring, a over the left factor and b
// over the right. Its trace is trace(a) * trace(b).
template <class Coeff>
RingElem<ProductGroup, Coeff> product_embed(const std::shared_ptr<const ProductGroup>& G,
                                            const RingElem<WreathGroup, Coeff>& a,
                                            const RingElem<WreathGroup, Coeff>& b) {
    if (!(*a.group() == G->left()) || !(*b.group() == G->right()))
        throw invalid_input("product_embed: factors do not match the product group");
    RingElem<ProductGroup, Coeff> out(G);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            out.add_term({ea, eb}, ca * cb);
    return out;
}

template <class Coeff>
RingElem<ProductGroup, Coeff> embed_left(const std::shared_ptr<const ProductGroup>& G,
                                         const RingElem<WreathGroup, Coeff>& a) {
    RingElem<ProductGroup, Coeff> out(G);
    for (const auto& [e, c] : a.terms()) out.add_term({e, G->right().identity()}, c);
    return out;
}

template <class Coeff>
RingElem<ProductGroup, Coeff> embed_right(const std::shared_ptr<const ProductGroup>& G,
                                          const RingElem<WreathGroup, Coeff>& b) {
    RingElem<ProductGroup, Coeff> out(G);
    for (const auto& [e, c] : b.terms()) out.add_term({G->left().identity(), e}, c);
    return out;
}

} // namespace wreathlab
