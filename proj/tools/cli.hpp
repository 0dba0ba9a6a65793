#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace primelab::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 on usage errors and 1 when the library rejects the request.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ChernacEntry {
    std::uint64_t offset;  // n - base
    std::uint64_t n;
    std::string text;      // "619·1093", "prime" or "unit"
};

/// Entries for n in [base, base + 1000) not divisible by 2, 3 or 5.
/// base must be a multiple of 1000.
std::vector<ChernacEntry> chernac_entries(std::uint64_t base);

/// The same entries laid out one per line as "567 : 619·1093".
std::string chernac_page(std::uint64_t base);

}  // namespace primelab::cli
