#include "sml/parallel.hpp"

namespace sml {

namespace detail {
int& thread_setting() {
    static int setting = [] {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }();
    return setting;
}
} // namespace detail

int max_threads() { return detail::thread_setting(); }

void set_max_threads(int n) { detail::thread_setting() = n < 1 ? 1 : n; }

} // namespace sml
