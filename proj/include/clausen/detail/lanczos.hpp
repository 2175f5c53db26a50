#pragma once

namespace clausen::detail {

// 17-term Lanczos rational approximation, g = 12.2252227365970611572265625,
// the published coefficient set optimized for 64-bit-mantissa reals.
// lanczos_sum(z) = num(z)/den(z) where den(z) = z(z+1)...(z+15); the
// normalisation already carries sqrt(2*pi), so
//   Gamma(z) = (z+g-1/2)^(z-1/2) * exp(-(z+g-1/2)) * lanczos_sum(z),  z >= 1/2.
inline constexpr long double lanczos_g = 12.2252227365970611572265625L;

inline long double lanczos_sum(long double z) {
    static constexpr long double num[17] = {
        553681095419291969.2230556393350368550504L,
        731918863887667017.2511276782146694632234L,
        453393234285807339.4627124634539085143364L,
        174701893724452790.3546219631779712198035L,
        46866125995234723.82897281620357050883077L,
        9281280675933215.169109622777099699054272L,
        1403600894156674.551057997617468721789536L,
        165345984157572.7305349809894046783973837L,
        15333629842677.31531822808737907246817024L,
        1123152927963.956626161137169462874517318L,
        64763127437.92329018717775593533620578237L,
        2908830362.657527782848828237106640944457L,
        99764700.56999856729959383751710026787811L,
        2525791.604886139959837791244686290089331L,
        44516.94034970167828580039370201346554872L,
        488.0063567520005730476791712814838113252L,
        2.50662827463100050241576877135758834683L,
    };
    static constexpr long double den[17] = {
        0.0L,
        1307674368000.0L,
        4339163001600.0L,
        6165817614720.0L,
        5056995703824.0L,
        2706813345600.0L,
        1009672107080.0L,
        272803210680.0L,
        54631129553.0L,
        8207628000.0L,
        928095740.0L,
        78558480.0L,
        4899622.0L,
        218400.0L,
        6580.0L,
        120.0L,
        1.0L,
    };
    long double p = num[16], q = den[16];
    for (int i = 15; i >= 0; --i) {
        p = p * z + num[i];
        q = q * z + den[i];
    }
    return p / q;
}

} // namespace clausen::detail
