#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "socular/error.hpp"

namespace socular::detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

inline std::int64_t parse_int64(std::string_view text, std::string_view what)
{
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw parse_error("malformed " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

/// Splits on commas; an empty input yields no fields, an empty field is an error.
inline std::vector<std::string_view> split_csv(std::string_view text, std::string_view what)
{
    std::vector<std::string_view> fields;
    text = trim(text);
    if (text.empty())
        return fields;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto field = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        if (field.empty())
            throw parse_error("empty field in " + std::string(what) + ": '" + std::string(text) + "'");
        fields.push_back(field);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what)
{
    std::vector<int> out;
    for (auto field : split_csv(text, what)) {
        auto v = parse_int64(field, what);
        if (v < INT32_MIN || v > INT32_MAX)
            throw parse_error("value out of range in " + std::string(what));
        out.push_back(static_cast<int>(v));
    }
    return out;
}

template <typename Range>
std::string join(const Range& values, std::string_view sep = ",")
{
    std::string out;
    bool first = true;
    for (const auto& v : values) {
        if (!first)
            out += sep;
        first = false;
        if constexpr (std::is_convertible_v<decltype(v), std::string_view>)
            out += v;
        else
            out += std::to_string(v);
    }
    return out;
}

} // namespace socular::detail
