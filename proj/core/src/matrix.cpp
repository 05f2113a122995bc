#include "qvl/matrix.hpp"

namespace qvl {

template class Matrix<PrimeField>;
template class Matrix<RationalField>;

}  // namespace qvl
