#include "simpson/cell_index.hpp"

#include "simpson/errors.hpp"

namespace simpson {

CellIndex::CellIndex(int depth, std::uint32_t pattern) : depth_(depth), pattern_(pattern) {
    if (depth < 0 || depth > kMaxDepth) {
        throw PreconditionError("cell depth " + std::to_string(depth) + " out of range");
    }
    if (depth < 32 && (pattern >> depth) != 0) {
        throw PreconditionError("cell pattern has bits beyond depth " + std::to_string(depth));
    }
}

CellIndex CellIndex::parse(const std::string& bits) {
    if (bits.empty() || bits == "()") return {};
    std::uint32_t pattern = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw PreconditionError("cell '" + bits + "' is not a bit string");
        }
        pattern = (pattern << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    return {static_cast<int>(bits.size()), pattern};
}

int CellIndex::bit(int position) const {
    if (position < 1 || position > depth_) {
        throw PreconditionError("bit position " + std::to_string(position) + " out of range");
    }
    return static_cast<int>((pattern_ >> (depth_ - position)) & 1U);
}

CellIndex CellIndex::child(int bit) const {
    return {depth_ + 1, (pattern_ << 1) | static_cast<std::uint32_t>(bit & 1)};
}

CellIndex CellIndex::parent() const {
    if (depth_ == 0) throw PreconditionError("root cell has no parent");
    return {depth_ - 1, pattern_ >> 1};
}

std::string CellIndex::to_string() const {
    if (depth_ == 0) return "()";
    std::string out;
    out.reserve(static_cast<std::size_t>(depth_));
    for (int i = 1; i <= depth_; ++i) out.push_back(static_cast<char>('0' + bit(i)));
    return out;
}

}  // namespace simpson
