#ifndef SGDEC_ANALYTIC_HPP
#define SGDEC_ANALYTIC_HPP

namespace sgdec::analytic {

/// Traveling 2*pi kink: phi = polarity * 4*atan(exp((x - x0 - u*t)/sqrt(1-u^2))) + 2*pi*n.
/// Requires |u| < 1.
struct Kink {
    double x0 = 0.0;
    double u = 0.0;
    int n = 0;
    int polarity = +1;
};
double kink(double x, double t, const Kink& k);
double kink_dt(double x, double t, const Kink& k); // exact d(phi)/dt

/// Kink-antikink pair, both moving at speed u toward each other, separated by d:
/// phi = -4*atan( sinh((u*t - d/2)/sqrt(1-u^2)) / (u*cosh((x - x0)/sqrt(1-u^2))) ).
/// Requires 0 < |u| < 1 (the formula divides by u).
struct KinkAntikink {
    double x0 = 0.0;
    double u = 0.0;
    double d = 0.0;
};
double kink_antikink(double x, double t, const KinkAntikink& p);

/// Rest-frame breather with internal frequency cos(nu), nu in (0, pi/2):
/// phi = 4*atan( tan(nu)*sin(cos(nu)*(t - t0)) / cosh(sin(nu)*(x - x0)) ).
/// A nonzero boost u applies the Lorentz map x -> gamma*(x - u*t), t -> gamma*(t - u*x)
/// before evaluating the rest-frame form.
struct Breather {
    double nu = 0.0;
    double x0 = 0.0;
    double t0 = 0.0;
    double u = 0.0;
};
double breather(double x, double t, const Breather& b);

/// Rest energy of a kink is 8; a kink moving at u carries 8/sqrt(1-u^2).
double kink_energy(double u);

} // namespace sgdec::analytic

#endif
