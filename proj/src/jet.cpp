#include "colie/jet.hpp"

namespace colie {

Jet::Jet(const FieldSpec& f, std::size_t order) {
    if (order == 0) throw PreconditionError("jet order must be at least 1");
    c_.assign(order, Scalar::zero(f));
}

Jet::Jet(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw PreconditionError("jet order must be at least 1");
    for (const Scalar& c : c_)
        if (c.field() != c_.front().field()) throw FieldMismatch("jet coefficients mix fields");
}

Jet Jet::constant(const Scalar& c, std::size_t order) {
    Jet j(c.field(), order);
    j.c_[0] = c;
    return j;
}

Jet Jet::eps(const FieldSpec& f, std::size_t order) {
    Jet j(f, order);
    if (order >= 2) j.c_[1] = Scalar::one(f);
    return j;
}

const Scalar& Jet::coeff(std::size_t i) const {
    if (i >= c_.size()) throw PreconditionError("jet coefficient index out of range");
    return c_[i];
}

void Jet::check_compatible(const Jet& o) const {
    if (order() != o.order())
        throw FieldMismatch("jet orders differ: " + std::to_string(order()) + " vs " +
                            std::to_string(o.order()));
    if (field() != o.field())
        throw FieldMismatch("jet fields differ: " + field().str() + " vs " + o.field().str());
}

Jet Jet::operator+(const Jet& o) const {
    check_compatible(o);
    Jet out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

Jet Jet::operator-(const Jet& o) const {
    check_compatible(o);
    Jet out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
    return out;
}

Jet Jet::operator*(const Jet& o) const {
    check_compatible(o);
    Jet out(field(), order());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; i + j < c_.size(); ++j)
            out.c_[i + j] += c_[i] * o.c_[j];
    return out;
}

Jet Jet::operator-() const {
    Jet out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Jet Jet::scaled(const Scalar& c) const {
    Jet out = *this;
    for (auto& x : out.c_) x *= c;
    return out;
}

bool Jet::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Jet::operator==(const Jet& o) const {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string Jet::str() const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) out += " + ";
        out += c_[i].str();
        if (i == 1) out += "*e";
        if (i >= 2) out += "*e^" + std::to_string(i);
        first = false;
    }
    return first ? "0" : out;
}

} // namespace colie
