#ifndef DIMERCOUNT_FAMILY_HPP
#define DIMERCOUNT_FAMILY_HPP

#include <string>

#include <dimercount/errors.hpp>

namespace dimercount {

// The two self-similar graph families handled by this library.
enum class GraphFamily { Hanoi, SierpX };

inline const char* family_name(GraphFamily f) {
    return f == GraphFamily::Hanoi ? "hanoi" : "sierpx";
}

inline GraphFamily parse_family(const std::string& s) {
    if (s == "hanoi") return GraphFamily::Hanoi;
    if (s == "sierpx") return GraphFamily::SierpX;
    throw DomainError("unknown graph family '" + s + "' (expected hanoi|sierpx)");
}

}  // namespace dimercount

#endif
