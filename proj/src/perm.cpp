#include "fslab/perm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace fslab {

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
    if (img_.empty()) throw std::invalid_argument("permutation must have degree >= 1");
    std::vector<char> seen(img_.size(), 0);
    for (uint8_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw std::invalid_argument("image array is not a permutation of 0.." +
                                        std::to_string(img_.size() - 1));
        seen[v] = 1;
    }
}

Perm Perm::identity(int m) {
    if (m < 1 || m > 255) throw std::invalid_argument("permutation degree out of range");
    std::vector<uint8_t> img(m);
    std::iota(img.begin(), img.end(), uint8_t{0});
    return Perm(std::move(img));
}

Perm Perm::parse(std::string_view csv) {
    std::vector<uint8_t> img;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view tok = csv.substr(pos, comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty permutation entry");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("permutation entries must be decimal integers");
            value = value * 10 + (c - '0');
            if (value > 254) throw std::invalid_argument("permutation entry too large");
        }
        img.push_back(static_cast<uint8_t>(value));
        pos = comma + 1;
        if (comma == csv.size()) break;
    }
    return Perm(std::move(img));
}

Perm Perm::compose(const Perm& q) const {
    if (degree() != q.degree()) throw std::invalid_argument("composing permutations of unequal degree");
    std::vector<uint8_t> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = img_[q.img_[i]];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<uint8_t> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<uint8_t>(i);
    return Perm(std::move(img));
}

int Perm::sign() const {
    std::vector<char> seen(img_.size(), 0);
    int parity = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = img_[j];
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity ? -1 : 1;
}

std::string Perm::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(img_[i]);
    }
    return out;
}

std::size_t PermHash::operator()(const Perm& p) const {
    std::size_t h = 14695981039346656037ull;
    for (uint8_t v : p.images()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial domain is 0..20");
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

uint64_t perm_rank(const Perm& p) {
    int n = p.degree();
    if (n > 20) throw std::invalid_argument("perm_rank domain is degree <= 20");
    uint64_t rank = 0;
    uint64_t seen = 0;
    for (int i = 0; i < n; ++i) {
        int v = p[i];
        uint64_t smaller = v - std::popcount(seen & ((uint64_t{1} << v) - 1));
        rank += smaller * factorial(n - 1 - i);
        seen |= uint64_t{1} << v;
    }
    return rank;
}

Perm perm_unrank(int n, uint64_t rank) {
    if (n < 1 || n > 20) throw std::invalid_argument("perm_unrank domain is degree 1..20");
    if (rank >= factorial(n)) throw std::invalid_argument("rank out of range");
    std::vector<uint8_t> pool(n);
    std::iota(pool.begin(), pool.end(), uint8_t{0});
    std::vector<uint8_t> img;
    img.reserve(n);
    for (int i = 0; i < n; ++i) {
        uint64_t f = factorial(n - 1 - i);
        std::size_t d = rank / f;
        rank %= f;
        img.push_back(pool[d]);
        pool.erase(pool.begin() + d);
    }
    return Perm(std::move(img));
}

std::vector<Perm> group_closure(int degree, const std::vector<Perm>& gens, std::size_t cap) {
    for (const Perm& g : gens)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> order;
    order.push_back(Perm::identity(degree));
    seen.insert(order.front());
    for (std::size_t head = 0; head < order.size(); ++head) {
        Perm cur = order[head];  // copy: order may reallocate below
        for (const Perm& g : gens) {
            Perm next = cur.compose(g);
            if (seen.insert(next).second) {
                if (order.size() + 1 > cap)
                    throw std::runtime_error("group closure exceeded element cap " +
                                             std::to_string(cap));
                order.push_back(std::move(next));
            }
        }
    }
    return order;
}

uint64_t closure_order(int degree, const std::vector<Perm>& gens, std::size_t cap) {
    return group_closure(degree, gens, cap).size();
}

Perm alpha_generator(int k, int ell) {
    if (k < 2 || ell < 2) throw std::invalid_argument("alpha/beta generators need k, ell >= 2");
    std::vector<uint8_t> img(k + ell);
    img[0] = 0;
    for (int i = 1; i < k; ++i) img[i] = static_cast<uint8_t>(1 + i % (k - 1));
    for (int i = 0; i < ell; ++i)
        img[k + i] = static_cast<uint8_t>(k + (i - 1 + ell) % ell);
    return Perm(std::move(img));
}

Perm beta_generator(int k, int ell) {
    if (k < 2 || ell < 2) throw std::invalid_argument("alpha/beta generators need k, ell >= 2");
    std::vector<uint8_t> img(k + ell);
    for (int i = 0; i < k; ++i) img[i] = static_cast<uint8_t>((i - 1 + k) % k);
    img[k] = static_cast<uint8_t>(k);
    for (int i = 1; i < ell; ++i) img[k + i] = static_cast<uint8_t>(k + 1 + i % (ell - 1));
    return Perm(std::move(img));
}

uint64_t alpha_beta_order(int k, int ell) {
    return closure_order(k + ell, {alpha_generator(k, ell), beta_generator(k, ell)});
}

uint64_t cycle_subgroup_order(const Partition& p) {
    if (p.t() < 2) throw std::invalid_argument("cycle subgroup needs at least two classes");
    std::vector<Perm> gens;
    for (int i = 0; i < p.t(); ++i)
        for (int j = 0; j < p.t(); ++j) {
            if (i == j) continue;
            std::vector<uint8_t> img(p.n());
            std::iota(img.begin(), img.end(), uint8_t{0});
            for (int x = 0; x < p.part(i); ++x)
                img[p.offset(i) + x] = static_cast<uint8_t>(p.offset(i) + (x + 1) % p.part(i));
            for (int x = 0; x < p.part(j); ++x)
                img[p.offset(j) + x] =
                    static_cast<uint8_t>(p.offset(j) + (x - 1 + p.part(j)) % p.part(j));
            gens.emplace_back(std::move(img));
        }
    uint64_t closed_form = 1;
    for (int k : p.parts()) closed_form *= static_cast<uint64_t>(k);
    closed_form /= static_cast<uint64_t>(p.gcd_parts());
    uint64_t computed = closure_order(p.n(), gens);
    if (computed != closed_form)
        throw std::logic_error("cycle subgroup order mismatch: closure " +
                               std::to_string(computed) + " vs closed form " +
                               std::to_string(closed_form));
    return computed;
}

uint64_t cycle_component_formula(const Partition& p) {
    if (p.t() < 2 || p.n() < 4)
        throw std::invalid_argument("cycle component formula needs t >= 2 and n >= 4");
    uint64_t count = static_cast<uint64_t>(p.gcd_parts());
    for (int k : p.parts()) count *= factorial(k - 1);
    return count;
}

}  // namespace fslab
