#ifndef MTD_MTD_HPP
#define MTD_MTD_HPP

#include "mtd/angle.hpp"
#include "mtd/enumerate.hpp"
#include "mtd/io.hpp"
#include "mtd/layout.hpp"
#include "mtd/locator.hpp"
#include "mtd/svg.hpp"
#include "mtd/tree.hpp"
#include "mtd/verify.hpp"

#endif
