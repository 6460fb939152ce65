#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sbtree {

enum class Turn : std::uint8_t { L, R };

constexpr Turn mirror(Turn t) noexcept { return t == Turn::L ? Turn::R : Turn::L; }

constexpr char to_char(Turn t) noexcept { return t == Turn::L ? 'L' : 'R'; }

/// Signed rotation step of a turn: L is counterclockwise (+1), R clockwise (-1).
constexpr int rotation(Turn t) noexcept { return t == Turn::L ? +1 : -1; }

using TurnSequence = std::vector<Turn>;

/// Default bound on expand(); deeper requests must pass an explicit limit.
inline constexpr std::size_t kDefaultExpansionLimit = 64;

/// Largest prefix parse_address will materialize.
inline constexpr std::size_t kMaxParsedTurns = 1'000'000;

/// A branch path: a finite prefix followed by an optional infinitely
/// repeated cycle. An empty cycle denotes a finite path (a branch endpoint);
/// a nonempty cycle denotes a branch tip. The cycle is kept exactly as
/// written, so R(LR)^inf and (RL)^inf are different values naming the same
/// tip. Use same_path() for infinite-word equality.
class Address {
public:
    Address() = default;
    explicit Address(TurnSequence prefix, TurnSequence cycle = {})
        : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {}

    /// R^k (LR)^inf, the wound path used by every extremal candidate.
    static Address wound(std::size_t k);

    const TurnSequence& prefix() const noexcept { return prefix_; }
    const TurnSequence& cycle() const noexcept { return cycle_; }
    bool is_finite() const noexcept { return cycle_.empty(); }

    friend bool operator==(const Address&, const Address&) = default;

private:
    TurnSequence prefix_;
    TurnSequence cycle_;
};

class AddressParseError : public std::invalid_argument {
public:
    AddressParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ExpansionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Parses the run-length notation, e.g. "R^3(LR)^inf", "RLLR", "((LR)^2R)^inf".
///
///   item := ('L'|'R') ['^' n] | '(' item+ ')' ['^' (n | 'inf')]
///
/// At most one '^inf' group is allowed and it must end the string.
Address parse_address(std::string_view text);

/// Canonical run-length printer; parse_address(format(a)) == a for nonempty a.
std::string format(const Address& a);

Address mirror(const Address& a);

/// First `depth` turns of the address.
TurnSequence expand(const Address& a, std::size_t depth,
                    std::size_t limit = kDefaultExpansionLimit);

/// True when both addresses spell the same (finite or infinite) turn word.
bool same_path(const Address& a, const Address& b);

std::string to_string(const TurnSequence& turns);

}  // namespace sbtree
