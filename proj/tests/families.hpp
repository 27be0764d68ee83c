#pragma once

#include <vector>

#include "rotgeo/surface.hpp"

namespace testing {

inline rotgeo::SurfaceFamily family(rotgeo::FamilyKind k, rotgeo::Variant v, const char* fa,
                                    const char* fb, rotgeo::Interval dom = {0.5, 10}) {
    using rotgeo::ProfileFunction;
    return rotgeo::SurfaceFamily(k, v, ProfileFunction::parse(fa, dom),
                                 ProfileFunction::parse(fb, dom));
}

inline const std::vector<rotgeo::FamilyKind>& kinds() {
    static const std::vector<rotgeo::FamilyKind> k = {rotgeo::FamilyKind::hyperbolic14,
                                                      rotgeo::FamilyKind::hyperbolic23,
                                                      rotgeo::FamilyKind::elliptic56};
    return k;
}

}  // namespace testing
