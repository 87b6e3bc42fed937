#include "relbell/format.hpp"

#include <array>
#include <charconv>

namespace relbell {

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    auto const res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

} // namespace relbell
