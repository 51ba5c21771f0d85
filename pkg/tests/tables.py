"""Golden data for the two example manifolds: representation tables and the
exact/asymptotic invariant tables, frozen as printed strings.

Float entries keep their printed form so tests can derive the matching
tolerance (one unit in the last printed decimal place) from the string.
"""
from fractions import Fraction


def last_place(printed: str) -> Fraction:
    """One unit in the last printed decimal place of a decimal string."""
    if "." not in printed:
        return Fraction(1)
    return Fraction(1, 10 ** len(printed.split(".", 1)[1]))


F = Fraction

# interior representation rows for Sigma(2,3,5,7): l -> (sum l/p, C, CS)
TABLE1_2357 = {
    (1, 1, 1, 1): (F(247, 210), F(37, 105), F(-529, 840)),
    (1, 1, 1, 2): (F(277, 210), F(67, 105), F(-289, 840)),
    (1, 1, 1, 3): (F(307, 210), F(4, 5), F(-169, 840)),
    (1, 1, 2, 1): (F(289, 210), F(4, 7), F(-361, 840)),
    (1, 1, 2, 2): (F(319, 210), F(109, 105), F(-121, 840)),
    (1, 1, 2, 3): (F(349, 210), F(139, 105), F(-1, 840)),
}

# missing representation rows for Sigma(2,3,5,7): l -> (sum l/p, CS)
TABLE2_2357 = {
    (1, 1, 1, 0): (F(31, 30), F(-7, 120)),
    (1, 1, 2, 0): (F(37, 30), F(-103, 120)),
    (1, 1, 0, 2): (F(47, 42), F(-125, 168)),
    (1, 1, 0, 3): (F(53, 42), F(-101, 168)),
    (1, 0, 1, 3): (F(79, 70), F(-243, 280)),
    (1, 0, 2, 1): (F(73, 70), F(-27, 280)),
    (1, 0, 2, 2): (F(83, 70), F(-227, 280)),
    (1, 0, 2, 3): (F(93, 70), F(-187, 280)),
    (0, 1, 1, 4): (F(116, 105), F(-121, 210)),
    (0, 1, 1, 5): (F(131, 105), F(-23, 105)),
    (0, 1, 1, 6): (F(146, 105), F(-1, 210)),
    (0, 1, 2, 2): (F(107, 105), F(-2, 105)),
    (0, 1, 2, 3): (F(122, 105), F(-79, 210)),
    (0, 1, 2, 4): (F(137, 105), F(-92, 105)),
    (0, 1, 2, 5): (F(152, 105), F(-109, 210)),
    (0, 1, 2, 6): (F(167, 105), F(-32, 105)),
}

# interior representation rows for Sigma(3,4,5,7); the all-ones label has a
# vanishing coefficient and is not printed
TABLE4_3457 = {
    (1, 1, 1, 2): (F(449, 420), F(29, 210), F(-841, 1680)),
    (1, 1, 1, 3): (F(509, 420), F(89, 210), F(-1201, 1680)),
    (1, 1, 1, 4): (F(569, 420), F(149, 210), F(-361, 1680)),
    (1, 1, 1, 5): (F(629, 420), F(4, 5), F(-1, 1680)),
    (1, 1, 1, 6): (F(689, 420), F(109, 210), F(-121, 1680)),
    (1, 1, 2, 1): (F(473, 420), F(53, 210), F(-1129, 1680)),
    (1, 1, 2, 2): (F(533, 420), F(113, 210), F(-1009, 1680)),
    (1, 1, 2, 3): (F(593, 420), F(173, 210), F(-1369, 1680)),
    (1, 1, 2, 4): (F(653, 420), F(1), F(-529, 1680)),
    (1, 1, 2, 5): (F(713, 420), F(197, 210), F(-169, 1680)),
    (1, 1, 2, 6): (F(773, 420), F(4, 7), F(-289, 1680)),
    (1, 2, 1, 1): (F(247, 210), F(37, 105), F(-109, 420)),
    (1, 2, 1, 2): (F(277, 210), F(67, 105), F(-289, 420)),
    (1, 2, 1, 3): (F(307, 210), F(4, 5), F(-169, 420)),
    (1, 2, 2, 1): (F(289, 210), F(4, 7), F(-361, 420)),
    (1, 2, 2, 2): (F(319, 210), F(109, 105), F(-121, 420)),
    (1, 2, 2, 3): (F(349, 210), F(139, 105), F(-1, 420)),
}

# level -> (exact, (N+2)Z0+Z1, (N+2)Z0), each as (re, im) printed strings
TABLE3_2357 = {
    10: (("0.739637", "2.732051"), ("0.740798", "2.732420"), ("1.259843", "2.437384")),
    11: (("0.979154", "-0.903934"), ("0.980292", "-0.903502"), ("0.879253", "-0.968693")),
    12: (("-0.01437482", "0.0"), ("-0.01326139", "0.00048566"), ("-0.00073383", "0.00867459")),
    13: (("-0.04815996", "-0.13669"), ("-0.04707020", "-0.136157687"), ("-0.00575862", "0.007899715")),
    14: (("-1.864025", "-0.7606090"), ("-1.862959", "-0.7600360"), ("-1.995763", "-1.0444076")),
    100: (("-4.8885515", "17.7770857"), ("-4.8884355", "17.7779834"), ("-4.8802978", "18.1353532")),
    101: (("22.22565", "7.134420"), ("22.22576", "7.135315"), ("22.39565", "7.174075")),
    102: (("-0.6760584", "-6.611630"), ("-0.6759530", "-6.610738"), ("-0.6140020", "-6.398063")),
    103: (("0.28253575", "0.2563299"), ("0.28263601", "0.25721904"), ("0.00417075", "0.06066500")),
    104: (("-0.1814129", "-6.39840405"), ("-0.1813177", "-6.39751779"), ("-0.2590138", "-6.54593985")),
    1000: (("-86.3814448", "-52.1955841"), ("-86.3815556", "-52.1955281"), ("-86.3595930", "-52.0529208")),
    1001: (("-32.1688750", "226.931025"), ("-32.1689857", "226.931025"), ("-32.0565661", "227.078420")),
    1002: (("112.342695", "21.8373199"), ("112.342584", "21.8373757"), ("112.122297", "21.6486285")),
    1003: (("0.7904096329", "0.9244664554"), ("0.7902992554", "0.9245221724"), ("0.6333213866", "1.0639142783")),
    1004: (("57.8951433", "129.671829"), ("57.8950330", "129.671885"), ("58.1582795", "130.079477")),
    1005: (("69.6412229", "-74.3079505"), ("69.6411128", "-74.3078950"), ("69.5928674", "-74.2038809")),
    10000: (("527.74686902", "862.13517540"), ("527.74686459", "862.13517563"), ("527.55843581", "861.79480366")),
    10001: (("-6.393230664", "1.730198170"), ("-6.393235091", "1.730198403"), ("-6.624993671", "1.763443057")),
    10002: (("-301.5164629", "-551.4353628"), ("-301.5164673", "-551.4353625"), ("-301.7624718", "-551.3640027")),
    10003: (("-10.84155396", "-1.9919898321"), ("-10.84155838", "-1.9919895988"), ("-10.95621827", "-1.9107737795")),
    10004: (("-868.9478695", "-736.82135025"), ("-868.9478739", "-736.8213500"), ("-869.2651992", "-736.9897060")),
}

TABLE3_FAST_LEVELS = [10, 11, 12, 13, 14, 100, 101, 102, 103, 104, 1000, 1001, 1002, 1003, 1004, 1005]
TABLE3_SLOW_LEVELS = [10000, 10001, 10002, 10003, 10004]

# Two reference entries are internally inconsistent with the rest of the
# table and are corrected here; test_acceptance.py::test_reference_errata_documented
# keeps the evidence honest.
#   - level 1001, exact column, imaginary part: the tabulated 226.931025
#     duplicates the asymptotic row below it; the defining sum and the
#     theta-limit route agree on 226.930969... to 1e-44.
#   - level 103, leading column, real part: the tabulated 0.00417075
#     transposes the digits of 0.00410750...; the tabulated full asymptotic
#     column at the same level (which contains the leading term) matches
#     the corrected value, and two independent routes agree to 1e-57.
REFERENCE_ERRATA_TABLE3 = {
    (1001, "exact"): ("-32.1688750", "226.930969"),
    (103, "z0"): ("0.00410750", "0.06066500"),
}


def table3_expected(level):
    """(exact, asym, z0) printed pairs for a level, errata applied."""
    exact, asym, lead = TABLE3_2357[level]
    exact = REFERENCE_ERRATA_TABLE3.get((level, "exact"), exact)
    lead = REFERENCE_ERRATA_TABLE3.get((level, "z0"), lead)
    return exact, asym, lead


TABLE5_3457 = {
    998: (("170.573359", "-7.19243844"), ("170.573296", "-7.19236552"), ("170.574879", "-7.19150956")),
    999: (("1.981255663", "-0.539792723"), ("1.981192840", "-0.539719917"), ("2.018358388", "-0.430004395")),
    1000: (("10.9510287", "54.4329988"), ("10.9509659", "54.4330715"), ("10.9917059", "54.5856899")),
    1001: (("124.831004", "-123.107089"), ("124.830941", "-123.107017"), ("124.881006", "-123.189839")),
    1002: (("61.4397540", "-97.5216937"), ("61.4396912", "-97.5216212"), ("61.2653019", "-97.4592987")),
    1003: (("146.275643", "49.1637851"), ("146.275580", "49.1638575"), ("146.394939", "49.4235715")),
    1004: (("172.965961", "71.0176797"), ("172.965898", "71.0177519"), ("173.332924", "71.1299446")),
    1005: (("99.17707586", "-1.446353766"), ("99.17701318", "-1.446281609"), ("99.07532715", "-1.557181709")),
    1006: (("3.371067321", "-1.677974019"), ("3.371004661", "-1.677901969"), ("3.385944423", "-1.713271357")),
    1007: (("67.04084613", "-35.56880740"), ("67.04078349", "-35.56873545"), ("67.08289485", "-35.47827521")),
}
