#ifndef CSPAR_VERSION_HPP
#define CSPAR_VERSION_HPP

namespace cspar {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
