#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hc3 {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Counts enumeration nodes; throws BudgetExceeded past the limit.
class Budget {
public:
    static constexpr std::uint64_t kDefault = 1'000'000;

    explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}
    void tick(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExceeded("enumeration budget of " + std::to_string(limit_) + " nodes exceeded");
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace hc3
