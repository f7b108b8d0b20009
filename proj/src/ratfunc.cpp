#include "qf/ratfunc.hpp"

#include <map>
#include <mutex>

namespace qf {

namespace {
std::map<std::pair<int, int>, BaseField*> base_registry;
std::mutex base_mutex;
}  // namespace

const BaseField& BaseField::get(int m, int r) {
    if (r < 0 || r > 2) throw std::out_of_range("base field supports 0 <= r <= 2 variables");
    std::lock_guard<std::mutex> lock(base_mutex);
    auto key = std::make_pair(m, r);
    auto it = base_registry.find(key);
    if (it == base_registry.end()) {
        auto* k = new BaseField;
        k->F = &Fq::get(m);
        k->r = r;
        it = base_registry.emplace(key, k).first;
    }
    return *it->second;
}

std::string BaseField::to_string() const {
    std::string s = "F" + std::to_string(F->q());
    if (r == 1) s += "(" + names[0] + ")";
    if (r == 2) s += "(" + names[0] + "," + names[1] + ")";
    return s;
}

RatFunc::RatFunc(const BaseField& k, MPoly num, MPoly den)
    : k_(&k), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("zero denominator (malformed input)");
    canonicalize();
}

RatFunc RatFunc::from_int(const BaseField& k, uint64_t bits) {
    return constant(k, k.F->from_int(bits));
}

RatFunc RatFunc::constant(const BaseField& k, uint32_t a) {
    RatFunc r;
    r.k_ = &k;
    r.num_ = MPoly::constant(a);
    return r;
}

RatFunc RatFunc::variable(const BaseField& k, int idx) {
    if (idx >= k.r) throw Error("variable index outside the base field");
    RatFunc r;
    r.k_ = &k;
    r.num_ = MPoly::variable(idx);
    return r;
}

void RatFunc::canonicalize() {
    const Fq& F = *k_->F;
    if (num_.is_zero()) {
        den_ = MPoly::constant(1);
        return;
    }
    MPoly g = mp_gcd(F, num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        num_ = mp_div_exact(F, num_, g);
        den_ = mp_div_exact(F, den_, g);
    }
    uint32_t lc = den_.lead().second;
    if (lc != 1) {
        MPoly il = MPoly::constant(F.inv(lc));
        num_ = mp_mul(F, num_, il);
        den_ = mp_mul(F, den_, il);
    }
}

bool RatFunc::is_one() const {
    return num_.is_constant() && num_.constant_value() == 1 && den_.is_constant() &&
           den_.constant_value() == 1;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    check_same(o);
    const Fq& F = *k_->F;
    MPoly n = mp_add(F, mp_mul(F, num_, o.den_), mp_mul(F, o.num_, den_));
    return RatFunc(*k_, std::move(n), mp_mul(F, den_, o.den_));
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    check_same(o);
    const Fq& F = *k_->F;
    return RatFunc(*k_, mp_mul(F, num_, o.num_), mp_mul(F, den_, o.den_));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    check_same(o);
    if (o.is_zero()) throw Error("division by zero in K");
    const Fq& F = *k_->F;
    return RatFunc(*k_, mp_mul(F, num_, o.den_), mp_mul(F, den_, o.num_));
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error("inverse of zero in K");
    return RatFunc(*k_, den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r = constant(*k_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    check_same(o);
    return mp_equal(num_, o.num_) && mp_equal(den_, o.den_);
}

bool RatFunc::operator<(const RatFunc& o) const {
    check_same(o);
    auto key = [](const MPoly& p) {
        std::vector<std::pair<Exp2, uint32_t>> v(p.terms.begin(), p.terms.end());
        return v;
    };
    auto a = std::make_pair(key(num_), key(den_));
    auto b = std::make_pair(key(o.num_), key(o.den_));
    return a < b;
}

std::string RatFunc::to_string() const {
    const Fq& F = *k_->F;
    if (is_polynomial()) return mp_to_string(F, num_, k_->names);
    std::string n = mp_to_string(F, num_, k_->names);
    std::string d = mp_to_string(F, den_, k_->names);
    if (num_.terms.size() > 1) n = "(" + n + ")";
    if (den_.terms.size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace qf
