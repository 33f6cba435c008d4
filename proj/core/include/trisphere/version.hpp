#ifndef TRISPHERE_VERSION_HPP
#define TRISPHERE_VERSION_HPP

#define TRISPHERE_VERSION "1.0.0"

#endif  // TRISPHERE_VERSION_HPP
