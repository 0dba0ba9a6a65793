#include <charconv>
#include <fstream>

#include <fmt/format.h>

#include "primelab/errors.hpp"
#include "primelab/zeta.hpp"

namespace primelab {

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string source)
    : gammas_(std::move(ordinates)), source_(std::move(source)) {
    for (std::size_t i = 0; i < gammas_.size(); ++i) {
        if (!(gammas_[i] > 0.0)) throw FormatError(fmt::format("{}: ordinate {} is not positive", source_, i + 1));
        if (i > 0 && !(gammas_[i] > gammas_[i - 1]))
            throw FormatError(fmt::format("{}: ordinates not strictly ascending at entry {}", source_, i + 1));
    }
}

double ZeroTable::max_ordinate() const {
    if (gammas_.empty()) throw ArgumentError("ZeroTable: table is empty");
    return gammas_.back();
}

ZeroTable ZeroTable::prefix(std::size_t count) const {
    if (count > gammas_.size())
        throw ArgumentError(fmt::format("ZeroTable: asked for {} zeros, table has {}", count, gammas_.size()));
    return ZeroTable(std::vector<double>(gammas_.begin(), gammas_.begin() + static_cast<std::ptrdiff_t>(count)), source_);
}

ZeroTable parse_zeros(std::istream& in, const std::string& source) {
    std::vector<double> values;
    std::vector<std::size_t> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const char* b = line.data() + first;
        const char* e = line.data() + last + 1;
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || ptr != e)
            throw ParseError(lineno, fmt::format("{}: cannot parse '{}' as an ordinate", source, std::string(b, e)));
        if (!(v > 0.0)) throw FormatError(fmt::format("{}: line {}: ordinate must be positive", source, lineno));
        if (!values.empty() && !(v > values.back()))
            throw FormatError(fmt::format("{}: line {}: ordinates not strictly ascending", source, lineno));
        values.push_back(v);
    }
    return ZeroTable(std::move(values), source);
}

ZeroTable load_zeros(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError(fmt::format("load_zeros: cannot open {}", path.string()));
    return parse_zeros(in, path.string());
}

}  // namespace primelab
