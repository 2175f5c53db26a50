// Sums a truncated Clausen series exactly, reverses the order of summation,
// and checks one catalog identity end to end.

#include <cstdio>

#include <clausen/catalog.hpp>
#include <clausen/series.hpp>

using namespace clausen;

int main() {
    HypergeometricSpec s;
    s.num = {Rational(-4), Rational(1, 2), Rational(3, 2)};
    s.den = {Rational(1, 3), Rational(-9)};
    s.z = Rational(1);
    s.truncation = 4;

    const ConvergenceInfo info = convergence_info(s);
    const Rational sum = eval_truncated(s);
    std::printf("3F2[-4, 1/2, 3/2; 1/3, -9; 1] cut after 5 terms\n");
    std::printf("  omega  = %s (%s)\n", to_string(info.omega).c_str(), regime_name(info.regime));
    std::printf("  sum    = %s\n", to_string(sum).c_str());

    // Summing the same terms last-to-first is an exact identity: the original
    // sum equals prefactor times the reversed series.
    const Reversal rev = reverse_truncated(s, 4);
    const Rational back = rev.prefactor * eval_truncated(rev.spec);
    std::printf("  reversed: prefactor %s, reproduces the sum: %s\n",
                to_string(rev.prefactor).c_str(), back == sum ? "yes" : "NO");

    // One catalog entry, bound and verified against its closed form.
    Binding b;
    b.m = 2;
    b.k = 1;
    const TheoremInstance inst = instantiate("dixon.trunc-b", b);
    const VerificationReport rep = verify(inst);
    std::printf("dixon.trunc-b at m=2, k=1\n");
    std::printf("  series %s, closed form %s, verdict %s (%lld terms)\n",
                to_string(*rep.lhs_exact).c_str(), to_string(*rep.rhs_exact).c_str(),
                rep.verdict.c_str(), rep.terms);
    return rep.verdict == "equal" && back == sum ? 0 : 1;
}
