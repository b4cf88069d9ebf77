#pragma once

namespace mixnorm {

/// Execution policy for the data-parallel kernels. Both paths produce
/// bit-identical results: parallel work units are independent and every
/// reduction is combined in a fixed order.
enum class Exec { serial, parallel };

}  // namespace mixnorm
