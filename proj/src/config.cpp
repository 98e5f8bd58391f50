#include "ms2c/config.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace ms2c {

void SolverConfig::apply_environment() {
    const char* raw = std::getenv("MS2COL_CAP_STATES");
    if (raw == nullptr || *raw == '\0') return;
    std::uint64_t n = 0;
    try {
        std::size_t used = 0;
        n = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw PreconditionError(std::string("MS2COL_CAP_STATES is not a positive integer: ") + raw);
    }
    if (n == 0) throw PreconditionError("MS2COL_CAP_STATES must be positive");
    const int bits = std::bit_width(n) - 1;
    bruteforce_bits = bits;
    orientation_bits = bits;
    dcc_bits = bits;
    dag_nodes = n;
    treewidth_cells = n;
    a2sat_nodes = n;
}

}  // namespace ms2c
