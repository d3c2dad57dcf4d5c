#include "relink/engine.hpp"

namespace relink {

namespace {
bool g_parallel = true;
}

bool engine_parallel() { return g_parallel; }
void set_engine_parallel(bool on) { g_parallel = on; }

}  // namespace relink
