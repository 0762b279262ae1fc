#pragma once

#include <string>

#include "errors.hpp"

namespace sl2coh {

// A validated prime characteristic. Construction checks primality, so
// every function taking a prime_char may assume its value is prime.
class prime_char {
public:
    explicit prime_char(int p) : p_(p) {
        if (p < 2 || !is_prime(p))
            throw not_prime("characteristic " + std::to_string(p) + " is not prime");
    }

    int value() const { return p_; }

    friend bool operator==(prime_char a, prime_char b) { return a.p_ == b.p_; }
    friend bool operator!=(prime_char a, prime_char b) { return a.p_ != b.p_; }

private:
    static bool is_prime(int n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (int d = 3; d * static_cast<long long>(d) <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    int p_;
};

} // namespace sl2coh
