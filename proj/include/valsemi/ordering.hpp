#pragma once

#include <string_view>

namespace valsemi {

enum class Ordering { less, equal, greater };

constexpr Ordering flip(Ordering o) {
    switch (o) {
        case Ordering::less: return Ordering::greater;
        case Ordering::greater: return Ordering::less;
        default: return Ordering::equal;
    }
}

constexpr std::string_view ordering_name(Ordering o) {
    switch (o) {
        case Ordering::less: return "less";
        case Ordering::equal: return "equal";
        default: return "greater";
    }
}

}  // namespace valsemi
