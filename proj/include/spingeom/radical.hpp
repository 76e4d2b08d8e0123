#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace spingeom {

// sqrt(prod(num) / prod(den)) for integer factors. The products are formed in
// long double, exact up to 2^64, before the single square root.
inline double sqrt_ratio(std::initializer_list<std::int64_t> num,
                         std::initializer_list<std::int64_t> den) {
    long double n = 1.0L, d = 1.0L;
    for (auto f : num) n *= static_cast<long double>(f);
    for (auto f : den) d *= static_cast<long double>(f);
    if (n <= 0.0L) return 0.0;
    return static_cast<double>(std::sqrt(n / d));
}

}  // namespace spingeom
