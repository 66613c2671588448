#pragma once
// Frozen reference values. Generated by tools/reference_values.py;
// do not edit by hand. See that script for provenance and method notes.
#include <complex>

namespace refval {

inline constexpr double kEulerGamma = 0.57721566490153286;
inline constexpr double kStieltjesGamma1 = -0.072815845483676725;
inline constexpr double kLog2Pi = 1.8378770664093455;
inline constexpr double kC0 = -0.19585383507339934;  // pi^2/24 - log^2(2pi)/2 + gamma^2/2 + gamma log(2pi) + 2 gamma_1
inline constexpr double kAsymConstA = 1.1303307007539063;  // (1 + log 2pi - gamma)/2
inline constexpr double kA1 = 1.2606614015078126;  // A(1) = log 2pi - gamma
inline constexpr std::complex<double> kA0{-0.57721566490153286, 1.5707963267948966};  // -gamma + i pi/2, reproduced by quadrature to <1e-25
inline constexpr std::complex<double> kLogGammaHalf{0.57236494292470009, 0.0};  // loggamma((0.5 + 0.0j))
inline constexpr std::complex<double> kLogGamma_2_100{-149.25288886980269, 362.86238008620363};  // loggamma((2.0 + 100.0j))
inline constexpr std::complex<double> kLogGamma_075_37{-4.5665021203147158, 1.5363488462805861};  // loggamma((0.75 + 3.7000000000000002j))
inline constexpr std::complex<double> kLogGamma_05_14{-21.283835799687659, 23.305944848039552};  // loggamma((0.5 + 14.134725141734694j))
inline constexpr std::complex<double> kLogGamma_1_1e4{-15702.439159229773, 82104.189109591891};  // loggamma((1.0 + 10000.0j))
inline constexpr std::complex<double> kLogGamma_05_1e4{-15707.044329415762, 82103.403723928494};  // loggamma((0.5 + 10000.0j))
inline constexpr std::complex<double> kLogGamma_15_m250{-386.25868024766124, -1131.9341924618454};  // loggamma((1.5 - 250.0j))
inline constexpr std::complex<double> kLogGamma_m03_7{-11.634424736051269, 5.3250009182951029};  // loggamma((-0.29999999999999999 + 7.0j))
inline constexpr std::complex<double> kZeta_2{1.6449340668482264, 0.0};  // zeta((2.0 + 0.0j))
inline constexpr std::complex<double> kZeta_05_0{-1.4603545088095868, 0.0};  // zeta((0.5 + 0.0j))
inline constexpr std::complex<double> kZeta_05_141{0.0046984001834891354, -0.027058282374250773};  // zeta((0.5 + 14.1j))
inline constexpr std::complex<double> kZeta_025_100{4.0018519671569542, 0.049302824895479513};  // zeta((0.25 + 100.0j))
inline constexpr std::complex<double> kZeta_075_1000{0.83371313000315203, 0.29162342463359249};  // zeta((0.75 + 1000.0j))
inline constexpr std::complex<double> kZeta_05_5000{0.40684271363543256, -0.69376415919808510};  // zeta((0.5 + 5000.0j))
inline constexpr std::complex<double> kZeta_m05_3{0.35291387981928725, 0.012124954416036982};  // zeta((-0.5 + 3.0j))
inline constexpr std::complex<double> kZeta_m1_500{-737.33696553042281, 191.54343618293068};  // zeta((-1.0 + 500.0j))
inline constexpr std::complex<double> kZeta_15_05{1.6136857738477235, -0.96609938319275598};  // zeta((1.5 + 0.5j))
inline constexpr std::complex<double> kZeta_0_2{0.31472576404209958, -0.23167964875052068};  // zeta((0.0 + 2.0j))
inline constexpr double kFirstZeroTau = 14.134725141734694;  // imaginary part of the first nontrivial zeta zero
inline constexpr std::complex<double> kLambdaLowerA{-0.22463071196769254, 0.093026301306074913};  // int_0..10.0 of e(it) t^(s-1) at s = (0.5 + 3.0j)
inline constexpr std::complex<double> kLambdaUpperA{0.22472332819829679, -0.092846465475913354};  // int_10.0..inf of e(it) t^(s-1) at s = (0.5 + 3.0j)
inline constexpr std::complex<double> kLambdaLowerB{-0.040189153478227706, -0.28802862898079213};  // int_0..20.0 of e(it) t^(s-1) at s = (0.5 - 35.0j)
inline constexpr std::complex<double> kLambdaUpperB{1.9759981419504522, -1.3043999776856824};  // int_20.0..inf of e(it) t^(s-1) at s = (0.5 - 35.0j)
inline constexpr std::complex<double> kLambdaLowerC{-0.025356450649590085, 0.061656575019156765};  // int_0..100.0 of e(it) t^(s-1) at s = (0.5 + 50.0j)
inline constexpr std::complex<double> kLambdaUpperC{0.025356450649590085, -0.061656575019156765};  // int_100.0..inf of e(it) t^(s-1) at s = (0.5 + 50.0j)
inline constexpr std::complex<double> kLambdaLowerD{0.92292292486643275, 1.6095529786875122};  // int_0..4.0 of e(it) t^(s-1) at s = (0.5 + 0.0j)
inline constexpr std::complex<double> kLambdaUpperD{0.33039121244906751, -0.35623884137201197};  // int_4.0..inf of e(it) t^(s-1) at s = (0.5 + 0.0j)
inline constexpr std::complex<double> kLambdaLowerE{-0.38768085727111140, 0.12987826527496433};  // int_0..5.0 of e(it) t^(s-1) at s = (0.5 - 10.0j)
inline constexpr std::complex<double> kLambdaUpperE{2.7656786717848097, 0.66278288638295621};  // int_5.0..inf of e(it) t^(s-1) at s = (0.5 - 10.0j)
inline constexpr std::complex<double> kLambdaLowerF{-0.020867298271486168, -0.021263470289183790};  // int_0..60.0 of e(it) t^(s-1) at s = (0.5 + 200.0j)
inline constexpr std::complex<double> kLambdaUpperF{0.020867298271486168, 0.021263470289183790};  // int_60.0..inf of e(it) t^(s-1) at s = (0.5 + 200.0j)
inline constexpr double kA_005 = 0.13175248011034185;  // A(0.05) by segment sums, T = 65536 and 131072, Richardson
inline constexpr double kA_3rd = 0.57500346946565206;  // A(0.3333333333333333) by segment sums, T = 65536 and 131072, Richardson
inline constexpr double kA_05 = 0.77220925597628853;  // A(0.5) by segment sums, T = 65536 and 131072, Richardson
inline constexpr double kA_2 = 1.5444185119745528;  // A(2.0) by segment sums, T = 65536 and 131072, Richardson
inline constexpr double kA_10 = 2.2953220517346655;  // A(10.0) by segment sums, T = 65536 and 131072, Richardson
inline constexpr double kA_20 = 2.6350496033122677;  // A(20.0) by segment sums, T = 65536 and 131072, Richardson
inline constexpr double kA_100 = 3.4342865630934747;  // A(100.0) by segment sums, T = 65536 and 131072, Richardson
inline constexpr double kPvExpAt1 = 0.69717488323506607;  // p.v. int_0^inf e^(-t)/(1-t) dt = Ei(1)/e
inline constexpr double kI2_10 = 9.9827346379189925;  // int_0^10 |zeta(1/2+it)|^2 dt
inline constexpr double kI2_100 = 295.63509905471913;  // int_0^100 |zeta(1/2+it)|^2 dt
inline constexpr double kW4Trunc64 = 1.8088285678679931;  // int_0^64 |zeta(1/2+it)|^2/(1+t) min(1, 2/|4-t|) dt
inline constexpr long long kTauPrefix100 = 482;
inline constexpr long long kTauPrefix10000 = 93668;
inline constexpr int kTau5040 = 60;
inline constexpr int kTau9973 = 2;  // 9973 is prime
inline constexpr double kDelta_100_5 = 3.1587997411292856;  // sum_(n<=100.5) tau(n) - 100.5 (log 100.5 + 2 gamma - 1)
inline constexpr std::complex<double> kI_05_20{0.91633127289802130, 1.9325395421805207};  // I(1/2, 20)
inline constexpr std::complex<double> kI_1_10{0.59010609680982079, 2.5337890378595586};  // I(1, 10)
inline constexpr std::complex<double> kI_05_09{1.1586943228324775, 0.85535399445812649};  // I(1/2, 0.9), below the first divisor jump
inline constexpr double kSyntheticLogSlope = -0.26555209156404147;  // LS slope of log(s^(-1/2) log^2(2+s)) over s = 1e2..1e6
inline constexpr double kSyntheticLogIntercept = 2.1422618030507694;

}  // namespace refval
