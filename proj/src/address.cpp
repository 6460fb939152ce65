#include "sbtree/address.hpp"

#include <algorithm>
#include <numeric>

namespace sbtree {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Address parse()
    {
        if (text_.empty()) {
            throw AddressParseError("empty address", 0);
        }
        TurnSequence prefix;
        TurnSequence cycle;
        while (pos_ < text_.size()) {
            if (text_[pos_] == ')') {
                fail("unmatched ')'");
            }
            bool infinite = false;
            TurnSequence item = parse_item(infinite);
            if (infinite) {
                if (pos_ != text_.size()) {
                    fail("'inf' group must terminate the address");
                }
                cycle = std::move(item);
            } else {
                append(prefix, item, 1);
            }
        }
        return Address(std::move(prefix), std::move(cycle));
    }

private:
    [[noreturn]] void fail(const std::string& message) const
    {
        throw AddressParseError(message + " at position " + std::to_string(pos_), pos_);
    }

    bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void append(TurnSequence& out, const TurnSequence& item, std::size_t times)
    {
        if (item.size() * times > kMaxParsedTurns - std::min(out.size(), kMaxParsedTurns)) {
            fail("address expands beyond " + std::to_string(kMaxParsedTurns) + " turns");
        }
        for (std::size_t i = 0; i < times; ++i) {
            out.insert(out.end(), item.begin(), item.end());
        }
    }

    // Parses "^n" or, when allowed, "^inf". Returns 0 for "inf".
    std::size_t parse_exponent(bool allow_inf)
    {
        ++pos_;  // '^'
        if (text_.substr(pos_, 3) == "inf") {
            if (!allow_inf) {
                fail("'inf' only applies to a parenthesized group");
            }
            pos_ += 3;
            return 0;
        }
        const std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (value > kMaxParsedTurns) {
                fail("exponent too large");
            }
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected positive integer or 'inf' after '^'");
        }
        if (value == 0) {
            pos_ = start;
            fail("exponent must be positive");
        }
        return value;
    }

    TurnSequence parse_item(bool& infinite)
    {
        infinite = false;
        const char c = text_[pos_];
        if (c == 'L' || c == 'R') {
            ++pos_;
            TurnSequence one{c == 'L' ? Turn::L : Turn::R};
            std::size_t times = at('^') ? parse_exponent(false) : 1;
            TurnSequence out;
            append(out, one, times);
            return out;
        }
        if (c != '(') {
            fail(std::string("unexpected character '") + c + "'");
        }
        ++pos_;
        TurnSequence body;
        while (!at(')')) {
            if (pos_ >= text_.size()) {
                fail("missing ')'");
            }
            bool nested_inf = false;
            TurnSequence inner = parse_item(nested_inf);
            if (nested_inf) {
                fail("'inf' group must terminate the address");
            }
            append(body, inner, 1);
        }
        if (body.empty()) {
            fail("empty group");
        }
        ++pos_;  // ')'
        if (!at('^')) {
            return body;
        }
        std::size_t times = parse_exponent(true);
        if (times == 0) {
            infinite = true;
            return body;
        }
        TurnSequence out;
        append(out, body, times);
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string run_length(const TurnSequence& turns)
{
    std::string out;
    for (std::size_t i = 0; i < turns.size();) {
        std::size_t j = i;
        while (j < turns.size() && turns[j] == turns[i]) {
            ++j;
        }
        out += to_char(turns[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

Turn turn_at(const Address& a, std::size_t index)
{
    const auto& prefix = a.prefix();
    if (index < prefix.size()) {
        return prefix[index];
    }
    return a.cycle()[(index - prefix.size()) % a.cycle().size()];
}

}  // namespace

Address Address::wound(std::size_t k)
{
    return Address(TurnSequence(k, Turn::R), TurnSequence{Turn::L, Turn::R});
}

Address parse_address(std::string_view text) { return Parser(text).parse(); }

std::string format(const Address& a)
{
    std::string out = run_length(a.prefix());
    if (!a.cycle().empty()) {
        out += '(' + run_length(a.cycle()) + ")^inf";
    }
    return out;
}

Address mirror(const Address& a)
{
    auto flip = [](TurnSequence turns) {
        std::ranges::transform(turns, turns.begin(), [](Turn t) { return mirror(t); });
        return turns;
    };
    return Address(flip(a.prefix()), flip(a.cycle()));
}

TurnSequence expand(const Address& a, std::size_t depth, std::size_t limit)
{
    if (depth > limit) {
        throw ExpansionError("expansion depth " + std::to_string(depth) + " exceeds limit " +
                             std::to_string(limit));
    }
    if (a.is_finite() && depth > a.prefix().size()) {
        throw ExpansionError("expansion depth " + std::to_string(depth) +
                             " exceeds finite address length " +
                             std::to_string(a.prefix().size()));
    }
    TurnSequence out;
    out.reserve(depth);
    for (std::size_t i = 0; i < depth; ++i) {
        out.push_back(turn_at(a, i));
    }
    return out;
}

bool same_path(const Address& a, const Address& b)
{
    if (a.is_finite() || b.is_finite()) {
        return a.is_finite() && b.is_finite() && a.prefix() == b.prefix();
    }
    // Past both prefixes the words are periodic with a common period lcm(|ca|, |cb|).
    const std::size_t span = std::max(a.prefix().size(), b.prefix().size()) +
                             std::lcm(a.cycle().size(), b.cycle().size());
    for (std::size_t i = 0; i < span; ++i) {
        if (turn_at(a, i) != turn_at(b, i)) {
            return false;
        }
    }
    return true;
}

std::string to_string(const TurnSequence& turns)
{
    std::string out;
    out.reserve(turns.size());
    for (Turn t : turns) {
        out += to_char(t);
    }
    return out;
}

}  // namespace sbtree
