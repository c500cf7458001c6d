#include "catwalk/bit_source.hpp"

#include <stdexcept>

namespace catwalk {

ReplayBitSource::ReplayBitSource(std::string_view bits) : bits_(bits) {
    for (char c : bits_)
        if (c != '0' && c != '1')
            throw std::invalid_argument("ReplayBitSource: bit string may contain only 0 and 1");
}

ReplayBitSource ReplayBitSource::from_hex(std::string_view hex) {
    std::string bits;
    bits.reserve(hex.size() * 4);
    for (char c : hex) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::invalid_argument("ReplayBitSource: invalid hex digit");
        for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1 ? '1' : '0');
    }
    return ReplayBitSource(bits);
}

int ReplayBitSource::draw() {
    if (position_ >= bits_.size())
        throw std::out_of_range("ReplayBitSource: bit string exhausted after " +
                                std::to_string(bits_.size()) + " bits");
    return bits_[position_++] == '1';
}

Natural uniform_below(const Natural& k, BitSource& source) {
    if (k < 1) throw std::invalid_argument("uniform_below: K must be >= 1");
    if (k == 1) return 0;

    const int width = ceil_log2(k);
    for (;;) {
        Natural value = 0;
        for (int i = 0; i < width; ++i) {
            value <<= 1;
            if (source.next_bit()) value |= 1;
        }
        if (value < k) return value;
        // Rejected draws are discarded whole; reusing their bits would skew
        // the distribution.
    }
}

}  // namespace catwalk
