#include "touchdown/parallel.hpp"

#include <cstdlib>
#include <string>

namespace touchdown {

int thread_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("TOUCHDOWN_CERT_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1 && cap < n) n = cap;
        } catch (...) {
        }
    }
    return n;
}

} // namespace touchdown
