#pragma once

// Umbrella header: the complete finite Askey-Wilson toolkit at roots of
// unity.

#include "qunity/alt_q_jacobi.hpp"
#include "qunity/askey_wilson.hpp"
#include "qunity/big_q_jacobi.hpp"
#include "qunity/common.hpp"
#include "qunity/cq_jacobi.hpp"
#include "qunity/errors.hpp"
#include "qunity/identities.hpp"
#include "qunity/root_of_unity.hpp"
#include "qunity/symmetric.hpp"
