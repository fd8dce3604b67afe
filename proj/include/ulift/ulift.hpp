#pragma once

#include "ulift/bigint.hpp"
#include "ulift/certificate.hpp"
#include "ulift/error.hpp"
#include "ulift/matrix.hpp"
#include "ulift/multi_lift.hpp"
#include "ulift/obstruction.hpp"
#include "ulift/primes.hpp"
#include "ulift/projective.hpp"
#include "ulift/sl_lift.hpp"
#include "ulift/sp_extend.hpp"
#include "ulift/sp_lift.hpp"
#include "ulift/surject.hpp"
#include "ulift/unital.hpp"
