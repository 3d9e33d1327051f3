#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ybm {

// Invalid objects or violated operation preconditions. CLI maps this to exit code 2.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A computation exceeded the configured work budget. CLI maps this to exit code 3.
struct WorkLimitExceeded : std::runtime_error {
    uint64_t budget;
    explicit WorkLimitExceeded(uint64_t b)
        : std::runtime_error("work limit exceeded (budget " + std::to_string(b) +
                             " elementary lookups); set YBMESH_WORK_LIMIT to raise it"),
          budget(b) {}
};

// Budget from YBMESH_WORK_LIMIT, default 1e9 elementary table lookups.
uint64_t default_work_limit();

// Counts elementary lookups against a budget; throws once past it.
class WorkGuard {
  public:
    WorkGuard() : budget_(default_work_limit()) {}
    explicit WorkGuard(uint64_t budget) : budget_(budget) {}
    void charge(uint64_t n) {
        used_ += n;
        if (used_ > budget_) throw WorkLimitExceeded(budget_);
    }
    uint64_t used() const { return used_; }
    uint64_t budget() const { return budget_; }

  private:
    uint64_t budget_;
    uint64_t used_ = 0;
};

}  // namespace ybm
