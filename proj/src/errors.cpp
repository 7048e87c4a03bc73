#include "ncsa/errors.hpp"

namespace ncsa {

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::schema:
    case ErrorKind::invalid_argument:
        return 2;
    case ErrorKind::tolerance:
        return 3;
    case ErrorKind::unsupported:
    case ErrorKind::pole:
    case ErrorKind::assumption:
        return 4;
    }
    return 1;
}

}  // namespace ncsa
