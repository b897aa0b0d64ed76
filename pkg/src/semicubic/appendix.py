"""Closed-form sign polynomials for the family 1, 1, sqrt x, sqrt y, (sqrt 1.11, sqrt 1.12, sqrt 1.13)^.

Each polynomial is stored as {(i, j): (a, b)} meaning (a + b sqrt 7) x^i y^j.
Positivity of p_1..p_9 is equivalent to positivity of the individually
checked coefficients c^[1](2,1), c^[1](3,1), c^[1](3,2), c^[1](4,2),
c^[1](4,3), c^[1](5,3), c^[2](1,1), c^[2](2,2), c^[2](3,3); phi_1..phi_9
carry the branch quantities of the three non-trivial diagonals of parity 1
and the one of parity 2.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import QuadraticNumber

RADICAND = 7


def _rat(terms: dict[tuple[int, int], int]) -> dict[tuple[int, int], tuple[int, int]]:
    return {k: (a, 0) for k, a in terms.items()}


P = {
    1: _rat({(0, 0): -87801, (1, 0): 18426, (1, 1): 201250, (2, 1): -62500, (1, 2): -69375}),
    2: _rat({(0, 0): -435897, (1, 0): 366522, (0, 1): 316400, (1, 1): -115150, (2, 1): -62500, (1, 2): -69375}),
    3: _rat({
        (0, 0): -8123260719, (1, 0): 7850825094, (0, 1): 6822137700, (1, 1): -609514150,
        (2, 1): -5695718750, (1, 2): -5016991875, (2, 2): 4769531250,
    }),
    4: _rat({
        (0, 0): -131357230786383, (1, 0): 128000551450758, (0, 1): 112478744797300,
        (1, 1): -35933010037750, (2, 1): -70176950718750, (1, 2): -61814356891875,
        (2, 2): 58765394531250,
    }),
    5: _rat({
        (0, 0): -729737521907523801, (1, 0): 647639252666034426, (0, 1): 612853634952978300,
        (1, 1): 61743428759974150, (2, 1): -473135879119093750, (1, 2): -509005371229162500,
        (2, 2): 348191411957812500, (3, 2): -333894287109375, (2, 3): 41509737773437500,
    }),
    6: _rat({
        (0, 0): -11898782682983018608569, (1, 0): 10887249907658628019194,
        (0, 1): 10193895909890838827500, (1, 1): -1882185487883551691050,
        (2, 1): -5829507166626354093750, (1, 2): -6271455178914511162500,
        (2, 2): 4290066386732207812500, (3, 2): -4113911511474609375,
        (2, 3): 511441479106523437500,
    }),
    7: _rat({(0, 0): -1, (0, 1): 2, (1, 1): -1}),
    8: _rat({(0, 0): -90160, (0, 1): 180320, (1, 1): -21410, (0, 2): -86247, (1, 2): 16650}),
    9: _rat({
        (0, 0): -71675667280, (0, 1): 143351334560, (1, 1): -22778571655, (0, 2): -61406571072,
        (1, 2): 13236466950, (2, 2): 4812890625, (1, 3): -5983385625,
    }),
}

PHI = {
    1: _rat({
        (0, 0): -833985739322884344, (1, 0): 775904394232181844, (0, 1): 700404154231975200,
        (1, 1): 866850580839425, (2, 1): -567462345089140625, (1, 2): -548398399244797500,
        (2, 2): 448253315343750000, (2, 3): 23719850156250000,
    }),
    2: _rat({
        (0, 0): -9693506945021586690580521, (1, 0): 8631115634040960029101146,
        (0, 1): 8140873654364803833354300, (1, 1): 765254451524447878242550,
        (2, 1): -6235415266776031685781250, (1, 2): -6735143739224307305482500,
        (2, 2): 4600718666945449248046875, (3, 2): -54373568447159912109375,
        (2, 3): 532706793238642148437500, (3, 3): 45664417777368164062500,
    }),
    3: {
        (0, 0): (-9693506945021586690580521, -1326008970008249128892304),
        (1, 0): (8631115634040960029101146, 1233661606079765237777304),
        (0, 1): (8140873654364803833354300, 1113618791487596680843200),
        # printed as "(765254451524447878242550x + 1378262950614937209550 sqrt7 xy)";
        # the rational part matches the xy coefficient of phi_2
        (1, 1): (765254451524447878242550, 1378262950614937209550),
        (2, 1): (-6235415266776031685781250, -902245834972000562968750),
        (1, 2): (-6735143739224307305482500, -871934809253653701885000),
        (2, 2): (4600718666945449248046875, 712707530783840812500000),
        (2, 3): (532706793238642148437500, 37713755273532187500000),
        (3, 2): (-54373568447159912109375, 0),
        (3, 3): (45664417777368164062500, 0),
    },
    4: _rat({
        (0, 0): -15147506089410954390264, (1, 0): 14431885836548408887764,
        (0, 1): 13058028690302041695200, (1, 1): -4417668640003352700575,
        (2, 1): -6991703553843301640625, (1, 2): -6756816677095149997500,
        (2, 2): 5522929098350343750000, (2, 3): 292252273775156250000,
    }),
    5: _rat({
        (0, 0): -6371142354921078097021338225, (1, 0): 5847553421217386053177843050,
        (0, 1): 5460819072005697558820637836, (1, 1): -1071522896299238745277246282,
        (2, 1): -3073062060077899456020431250, (1, 2): -3319348240439307612433995300,
        (2, 2): 2267418187817395207407421875, (3, 2): -26797469473498291083984375,
        (2, 3): 262539215979732396435937500, (3, 3): 22505251657398125976562500,
    }),
    6: {
        (0, 0): (-159278558873026952425533455625, -24084019666956377508070491024),
        (1, 0): (146188835530434651329446076250, 22946207795993527485642576024),
        (0, 1): (136520476800142438970515945900, 20761821644604776025950363200),
        (1, 1): (-26788072407480968631931157050, -7023942936871570679922430450),
        (2, 1): (-76826551501947486400510781250, -11116570932690018936337968750),
        (1, 2): (-82983706010982690310849882500, -10743108784814267260925085000),
        (2, 2): (56685454695434880185185546875, 8781269486787702650812500000),
        (2, 3): (6563480399493309910898437500, 464671178725190082187500000),
        (3, 2): (-669936736837457277099609375, 0),
        (3, 3): (562631291434953149414062500, 0),
    },
    7: _rat({(0, 0): -90160, (0, 1): 180320, (1, 1): -20785, (0, 2): -87024, (1, 2): 16650}),
    8: _rat({
        (0, 0): -1648540347440, (0, 1): 3297080694880, (1, 1): -518903268065,
        (0, 2): -1418571958272, (1, 2): 304438739850, (2, 2): 106846171875, (1, 3): -132831160875,
    }),
    9: {
        (0, 0): (-8099350402640, -573405338240),
        (0, 1): (16198700805280, 1146810676480),
        (1, 1): (-2561468897015, -132189773240),
        (0, 2): (-6954494590176, -553460804736),
        (1, 2): (1495720765350, 105891735600),
        (2, 2): (534230859375, 0),
        (1, 3): (-664155804375, 0),
    },
}


def evaluate(poly: dict[tuple[int, int], tuple[int, int]], x, y) -> QuadraticNumber:
    x, y = Fraction(x), Fraction(y)
    a = b = Fraction(0)
    for (i, j), (ca, cb) in poly.items():
        mono = x**i * y**j
        a += ca * mono
        b += cb * mono
    return QuadraticNumber(a, b, RADICAND)


def appendix_fixture(x, y) -> dict[str, QuadraticNumber]:
    """Exact values of p_1..p_9 and phi_1..phi_9 at (x, y)."""
    out = {f"p{k}": evaluate(P[k], x, y) for k in sorted(P)}
    out.update({f"phi{k}": evaluate(PHI[k], x, y) for k in sorted(PHI)})
    return out


def _branch(lead: QuadraticNumber, first: QuadraticNumber, limit: QuadraticNumber) -> bool:
    return (lead >= 0 and first >= 0) or (lead <= 0 and limit >= 0)


def fixture_law(values: dict[str, QuadraticNumber]) -> bool:
    """Conditions (a)-(d): p_1..p_9 > 0 and one branch per listed diagonal."""
    if not all(values[f"p{k}"] > 0 for k in range(1, 10)):
        return False
    return all(
        _branch(values[f"phi{a}"], values[f"phi{a + 1}"], values[f"phi{a + 2}"]) for a in (1, 4, 7)
    )


def fixture_boundary(values: dict[str, QuadraticNumber]) -> bool:
    return any(v.sign() == 0 for v in values.values())
