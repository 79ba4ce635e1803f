#include "wreathlab/groupring.hpp"

#include <algorithm>

namespace wreathlab {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw invalid_input("group needs at least one cyclic factor");
    for (int n : orders_)
        if (n < 1) throw invalid_input("cyclic orders must be positive");
}

long FiniteAbelianGroup::order() const {
    long out = 1;
    for (int n : orders_) out *= n;
    return out;
}

bool FiniteAbelianGroup::is_identity(const Elem& e) const {
    return std::all_of(e.begin(), e.end(), [](int r) { return r == 0; });
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::mul(const Elem& a, const Elem& b) const {
    Elem out(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) out[i] = (a[i] + b[i]) % orders_[i];
    return out;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::inverse(const Elem& a) const {
    Elem out(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) out[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
    return out;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::generator(size_t i) const {
    Elem out(orders_.size(), 0);
    if (i >= orders_.size()) throw invalid_input("generator index out of range");
    if (orders_[i] > 1) out[i] = 1;
    return out;
}

std::vector<FiniteAbelianGroup::Elem> FiniteAbelianGroup::elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<size_t>(order()));
    Elem cur(orders_.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        while (i < orders_.size()) {
            if (++cur[i] < orders_[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == orders_.size()) break;
    }
    return out;
}

std::string FiniteAbelianGroup::elem_to_string(const Elem& e) const {
    if (orders_.size() == 1) return std::to_string(e[0]);
    std::string out = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

WreathGroup::Elem WreathGroup::mul(const Elem& a, const Elem& b) const {
    // (f t^s)(g t^u) = [f . (t^s g t^-s)] t^(s+u); conjugation by t^s moves
    // the lamp at index i to index i - s.
    Elem out;
    out.shift = a.shift + b.shift;
    out.lamps.reserve(a.lamps.size() + b.lamps.size());
    size_t i = 0, j = 0;
    while (i < a.lamps.size() || j < b.lamps.size()) {
        long bj = j < b.lamps.size() ? b.lamps[j].first - a.shift : 0;
        if (j == b.lamps.size() || (i < a.lamps.size() && a.lamps[i].first < bj)) {
            out.lamps.push_back(a.lamps[i++]);
        } else if (i == a.lamps.size() || bj < a.lamps[i].first) {
            out.lamps.emplace_back(bj, b.lamps[j].second);
            ++j;
        } else {
            auto merged = base_.mul(a.lamps[i].second, b.lamps[j].second);
            if (!base_.is_identity(merged)) out.lamps.emplace_back(a.lamps[i].first, std::move(merged));
            ++i;
            ++j;
        }
    }
    return out;
}

WreathGroup::Elem WreathGroup::inverse(const Elem& a) const {
    Elem out;
    out.shift = -a.shift;
    out.lamps.reserve(a.lamps.size());
    for (const auto& [idx, val] : a.lamps)
        out.lamps.emplace_back(idx + a.shift, base_.inverse(val));
    std::sort(out.lamps.begin(), out.lamps.end());
    return out;
}

WreathGroup::Elem WreathGroup::lamp(long index, const FiniteAbelianGroup::Elem& value) const {
    Elem out;
    if (!base_.is_identity(value)) out.lamps.emplace_back(index, value);
    return out;
}

WreathGroup::Elem WreathGroup::shift_power(long k) const {
    Elem out;
    out.shift = k;
    return out;
}

std::string WreathGroup::elem_to_string(const Elem& e) const {
    // Label convention: "t^s·u[i]^v·..." lists the shift then the lamp
    // configuration (it is not a product expression).
    if (is_identity(e)) return "1";
    std::string out;
    if (e.shift != 0) out = "t^" + std::to_string(e.shift);
    for (const auto& [idx, val] : e.lamps) {
        if (!out.empty()) out += "·";
        out += "u[" + std::to_string(idx) + "]^" + base_.elem_to_string(val);
    }
    return out;
}

std::string coeff_to_string(const Rational& c) { return to_fraction_string(c); }
std::string coeff_to_string(const CyclotomicNumber& c) { return c.to_string(); }

FagRingQ average_projection(const std::shared_ptr<const FiniteAbelianGroup>& U) {
    FagRingQ out(U);
    Rational w(1, U->order());
    for (const auto& e : U->elements()) out.add_term(e, w);
    return out;
}

WreathRingQ embed_in_wreath(const std::shared_ptr<const WreathGroup>& W, const FagRingQ& a) {
    if (!(*a.group() == W->base()))
        throw invalid_input("embed_in_wreath: base group mismatch");
    WreathRingQ out(W);
    for (const auto& [e, c] : a.terms()) out.add_term(W->lamp(0, e), c);
    return out;
}

namespace {

template <class Group>
RingElem<Group, CyclotomicNumber> promote_impl(const RingElem<Group, Rational>& a) {
    RingElem<Group, CyclotomicNumber> out(a.group());
    for (const auto& [e, c] : a.terms()) out.add_term(e, CyclotomicNumber(c));
    return out;
}

template <class Group>
RingElem<Group, CyclotomicNumber> embed_coeff_impl(const RingElem<Group, CyclotomicNumber>& a,
                                                   long M) {
    RingElem<Group, CyclotomicNumber> out(a.group());
    for (const auto& [e, c] : a.terms()) out.add_term(e, c.embed_into(M));
    return out;
}

} // namespace

WreathRingC promote(const WreathRingQ& a) { return promote_impl(a); }
ProductRingC promote(const ProductRingQ& a) { return promote_impl(a); }
WreathRingC embed_coefficients(const WreathRingC& a, long M) { return embed_coeff_impl(a, M); }
ProductRingC embed_coefficients(const ProductRingC& a, long M) { return embed_coeff_impl(a, M); }

} // namespace wreathlab
