#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tsc {

/// Coefficient field for homology: the rationals or GF(p).
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws InputError unless p is a prime below 2^31.
    static FieldSpec prime(std::uint32_t p);
    /// "q" or "gf:<p>".
    static FieldSpec parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }
    std::string to_string() const;

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline FieldSpec default_field() { return FieldSpec::prime(kDefaultPrime); }

} // namespace tsc
