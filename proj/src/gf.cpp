#include "qf/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qf {

namespace {

// Classic primitive polynomials over F2 (Peterson/LFSR tables), bit i =
// coefficient of x^i.
constexpr std::array<uint32_t, 17> kModulus = {
    0,        //
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x89,     // x^7 + x^3 + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

uint32_t clmul_mod(uint32_t a, uint32_t b, uint32_t mod, int m) {
    uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m & 1) a ^= mod;
    }
    return r;
}

std::map<int, Fq*>& registry() {
    static std::map<int, Fq*> r;
    return r;
}
std::mutex registry_mutex;

}  // namespace

uint32_t Fq::modulus_bits(int m) {
    if (m < 1 || m > 16) throw std::out_of_range("GF(2^m) supports 1 <= m <= 16");
    return kModulus[static_cast<size_t>(m)];
}

const Fq& Fq::get(int m) {
    if (m < 1 || m > 16) throw std::out_of_range("GF(2^m) supports 1 <= m <= 16");
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& r = registry();
    auto it = r.find(m);
    if (it == r.end()) it = r.emplace(m, new Fq(m)).first;
    return *it->second;
}

Fq::Fq(int m) : m_(m), q_(1u << m), poly_(kModulus[static_cast<size_t>(m)]) {
    exp_.assign(2 * q_, 0);
    log_.assign(q_, 0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        exp_[i + q_ - 1] = x;
        log_[x] = i;
        x = clmul_mod(x, 2, poly_, m_);
    }
    if (x != 1) throw std::logic_error("table polynomial is not primitive");
}

uint32_t Fq::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of 0 in GF(2^m)");
    return exp_[(q_ - 1) - log_[a]];
}

uint32_t Fq::pow(uint32_t a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("inverse of 0 in GF(2^m)");
        return e == 0 ? 1u : 0u;
    }
    long long n = q_ - 1;
    long long k = (static_cast<long long>(log_[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return exp_[static_cast<size_t>(k)];
}

uint32_t Fq::sqrt(uint32_t a) const { return pow_frobenius(a, m_ - 1); }

uint32_t Fq::pow_frobenius(uint32_t v, int j) const {
    j %= m_;  // x^(2^m) = x
    for (int i = 0; i < j; ++i) v = square(v);
    return v;
}

void Fq::build_artin_schreier() const {
    // u -> u^2 + u is F2-linear; record images of basis vectors and solve by
    // Gaussian elimination once, caching a preimage for every image vector.
    as_preimage_.assign(q_, UINT32_MAX);
    as_preimage_[0] = 0;
    std::vector<std::pair<uint32_t, uint32_t>> rows;  // (image, preimage)
    for (int i = 0; i < m_; ++i) {
        uint32_t u = 1u << i;
        rows.emplace_back(square(u) ^ u, u);
    }
    // Span the image space, remembering preimages.
    std::vector<uint32_t> img{0}, pre{0};
    for (auto [iv, pv] : rows) {
        size_t n = img.size();
        for (size_t k = 0; k < n; ++k) {
            uint32_t niv = img[k] ^ iv, npv = pre[k] ^ pv;
            if (as_preimage_[niv] == UINT32_MAX) {
                as_preimage_[niv] = npv;
                img.push_back(niv);
                pre.push_back(npv);
            }
        }
    }
    as_ready_ = true;
}

bool Fq::solve_artin_schreier(uint32_t c, uint32_t& u) const {
    if (!as_ready_) build_artin_schreier();
    if (as_preimage_[c] == UINT32_MAX) return false;
    uint32_t a = as_preimage_[c];
    u = std::min(a, a ^ 1u);  // the two solutions differ by 1
    return true;
}

namespace {
std::map<std::pair<int, int>, std::vector<uint32_t>> embed_cache;
std::mutex embed_mutex;
}  // namespace

uint32_t Fq::embed(int m, int M, uint32_t v) {
    if (m == M) return v;
    if (M % m != 0) throw std::domain_error("no subfield embedding: m must divide M");
    std::lock_guard<std::mutex> lock(embed_mutex);
    auto key = std::make_pair(m, M);
    auto it = embed_cache.find(key);
    if (it == embed_cache.end()) {
        const Fq& big = Fq::get(M);
        uint32_t mod = kModulus[static_cast<size_t>(m)];
        uint32_t root = 0;
        bool found = false;
        for (uint32_t a = 0; a < big.q(); ++a) {
            uint32_t acc = 0;
            for (int i = m; i >= 0; --i) acc = big.add(big.mul(acc, a), (mod >> i & 1));
            if (acc == 0) {
                root = a;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("modulus has no root in extension");
        std::vector<uint32_t> pows(static_cast<size_t>(m));
        uint32_t p = 1;
        for (int i = 0; i < m; ++i) {
            pows[static_cast<size_t>(i)] = p;
            p = big.mul(p, root);
        }
        it = embed_cache.emplace(key, std::move(pows)).first;
    }
    const auto& pows = it->second;
    uint32_t r = 0;
    for (int i = 0; i < m; ++i)
        if (v >> i & 1) r ^= pows[static_cast<size_t>(i)];
    return r;
}

bool Fq::project(int M, int m, uint32_t v, uint32_t& out) {
    if (m == M) {
        out = v;
        return true;
    }
    const Fq& small = Fq::get(m);
    for (uint32_t a = 0; a < small.q(); ++a) {
        if (embed(m, M, a) == v) {
            out = a;
            return true;
        }
    }
    return false;
}

std::string Fq::to_string(uint32_t v) const {
    if (v == 0) return "0";
    if (v == 1) return "1";
    uint32_t k = log_[v];
    if (k == 1) return "g";
    return "g" + std::to_string(k);
}

bool table_polynomial_irreducible(int m) {
    // f irreducible over F2 iff x^(2^m) == x (mod f) and
    // gcd(x^(2^(m/p)) - x, f) = 1 for every prime p | m.
    uint32_t f = Fq::modulus_bits(m);
    auto mulmod = [&](uint32_t a, uint32_t b) { return clmul_mod(a, b, f, m); };
    auto frob = [&](uint32_t a, int times) {
        for (int i = 0; i < times; ++i) a = mulmod(a, a);
        return a;
    };
    auto deg = [](uint32_t p) {
        int d = -1;
        for (int i = 0; i < 32; ++i)
            if (p >> i & 1) d = i;
        return d;
    };
    auto polygcd = [&](uint32_t a, uint32_t b) {
        while (b) {
            int da = deg(a), db = deg(b);
            if (da < db) {
                std::swap(a, b);
                continue;
            }
            a ^= b << (da - db);
        }
        return a;
    };
    if (frob(2, m) != 2) return false;
    for (int p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        uint32_t h = frob(2, m / p) ^ 2u;
        uint32_t g = h == 0 ? f : polygcd(f, h);
        if (deg(g) != 0) return false;
    }
    return true;
}

}  // namespace qf
