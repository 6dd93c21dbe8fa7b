#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace jumpvar {

/// Calendar date (proleptic Gregorian). Stored as days since 1970-01-01,
/// so ordering and day arithmetic are plain integer operations.
class Date {
public:
    Date() : serial_(0) {}
    explicit Date(std::int64_t serial) : serial_(serial) {}
    Date(int year, int month, int day);

    /// Parses "YYYY-MM-DD". Throws std::invalid_argument on malformed or
    /// impossible dates (e.g. 2021-02-30).
    static Date parse(const std::string& iso);

    /// Returns true and fills `out` instead of throwing.
    static bool try_parse(const std::string& iso, Date& out);

    std::int64_t serial() const { return serial_; }
    std::string to_string() const;  // "YYYY-MM-DD"

    int year() const;
    int month() const;
    int day() const;
    int weekday() const;  // 0 = Monday ... 6 = Sunday

    Date operator+(std::int64_t days) const { return Date(serial_ + days); }
    std::int64_t operator-(const Date& o) const { return serial_ - o.serial_; }
    auto operator<=>(const Date&) const = default;

private:
    std::int64_t serial_;
};

}  // namespace jumpvar
