#pragma once

namespace digitop {

// Upper bound on worker threads used by search engines. Default 1.
void set_max_threads(unsigned n);
unsigned max_threads();

}  // namespace digitop
