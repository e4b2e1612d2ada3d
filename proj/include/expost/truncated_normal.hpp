#pragma once

namespace expost {

// erfcx(x) = exp(x^2) erfc(x), finite for all x >= 0.
double erfcx(double x);

// Standard normal cdf and density.
double norm_cdf(double z);
double norm_pdf(double z);

/// Mean of N(mu, sigma^2) truncated to [lo, hi]. Either bound may be infinite.
/// lo == hi returns lo.
double truncated_normal_mean(double mu, double sigma, double lo, double hi);

double truncated_normal_variance(double mu, double sigma, double lo, double hi);

}  // namespace expost
