#include "stanley/big_count.hpp"

#include <ostream>

namespace stanley {

std::ostream& operator<<(std::ostream& os, const BigCount& c) {
  return os << c.value_;
}

}  // namespace stanley
