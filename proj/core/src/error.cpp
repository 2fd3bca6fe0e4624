#include "laurent/error.hpp"

#include <fmt/format.h>

namespace laurent {

UnsupportedLength::UnsupportedLength(long long n)
    : Error(fmt::format("unsupported length N={}: requires N ≡ 0 (mod 4) and N >= 4", n)), length_(n) {}

void require_plan_length(long long n) {
    if (n < 4 || n % 4 != 0) throw UnsupportedLength(n);
}

}  // namespace laurent
