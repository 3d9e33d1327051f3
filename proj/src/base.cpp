#include "ybmesh/base.hpp"

#include <cstdlib>

namespace ybm {

uint64_t default_work_limit() {
    static const uint64_t limit = [] {
        if (const char* env = std::getenv("YBMESH_WORK_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
        }
        return static_cast<uint64_t>(1000000000ULL);
    }();
    return limit;
}

}  // namespace ybm
