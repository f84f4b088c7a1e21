#include "gf2x/modular.hpp"

#include <algorithm>
#include <vector>

#include "gf2x/gcd.hpp"

namespace gf2x {

bool is_irreducible(const Gf2Poly& f) {
    if (f.bit_length() < 2) return false;  // constants
    const std::size_t n = *f.degree();
    if (n == 1) return true;  // x and x+1

    // Checkpoints n/p for each prime p | n, visited in increasing order so a
    // single squaring chain covers them all.
    std::vector<std::size_t> checkpoints;
    {
        std::size_t m = n;
        for (std::size_t p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                checkpoints.push_back(n / p);
                while (m % p == 0) m /= p;
            }
        }
        if (m > 1) checkpoints.push_back(n / m);
        std::sort(checkpoints.begin(), checkpoints.end());
    }

    Gf2Poly v = Gf2Poly::x();  // deg f >= 2, so x is already reduced
    std::size_t done = 0;
    for (std::size_t target : checkpoints) {
        while (done < target) {
            v = square_mod(v, f);
            ++done;
        }
        if (gcd_euclid(v + Gf2Poly::x(), f).bit_length() > 1) return false;
    }
    while (done < n) {
        v = square_mod(v, f);
        ++done;
    }
    return v == Gf2Poly::x();
}

}  // namespace gf2x
