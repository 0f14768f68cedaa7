#include "msplect/complexify.hpp"

// header-only; this unit anchors the target
namespace msplect {}
