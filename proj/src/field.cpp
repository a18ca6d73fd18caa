#include "tsc/field.hpp"

#include <charconv>

#include "tsc/error.hpp"

namespace tsc {

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (p >= (1U << 31) || !is_prime(p))
        throw InputError("field characteristic must be a prime below 2^31, got " +
                         std::to_string(p));
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "q" || text == "Q")
        return rationals();
    constexpr std::string_view prefix = "gf:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view digits = text.substr(prefix.size());
        std::uint32_t p = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty())
            return prime(p);
    }
    throw InputError("bad field spec '" + std::string(text) + "' (expected q or gf:<prime>)");
}

std::string FieldSpec::to_string() const
{
    return is_rational() ? "q" : "gf:" + std::to_string(p_);
}

} // namespace tsc
