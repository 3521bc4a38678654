#ifndef TWISTLAB_FORMAT_HPP
#define TWISTLAB_FORMAT_HPP

#include <cstdio>
#include <string>

namespace twistlab {

// All floating output is serialized with 17 significant digits so that
// reruns are byte-identical.
inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace twistlab

#endif
