#ifndef DSTAB_FAMILY_HPP
#define DSTAB_FAMILY_HPP

#include <stdexcept>
#include <string>

namespace dstab {

// The three diagram algebra families handled by this library.
enum class Family { TL, Br, P };

inline const char* family_name(Family f) {
    switch (f) {
    case Family::TL: return "TL";
    case Family::Br: return "Br";
    case Family::P: return "P";
    }
    return "?";
}

inline Family family_from_name(const std::string& s) {
    if (s == "TL") return Family::TL;
    if (s == "Br") return Family::Br;
    if (s == "P") return Family::P;
    throw std::invalid_argument("unknown family: " + s);
}

} // namespace dstab

#endif
