"""Hand transcription of the exception tournaments and the finite exception list.

Labels are the 1-based ones of the drawings. An arc spec ``"12>34"`` means
every vertex of {1,2} dominates every vertex of {3,4}; a block drawn as an
ellipse is written out as its vertex group. Every drawing below fixes all
pairs, so the builder rejects both gaps and conflicting arcs.
"""

FIGURES: dict[str, tuple[int, str]] = {
    "3A": (3, "1>2 2>3 3>1"),
    "4A": (4, "1>2 3>4 4>12 12>3"),
    "5A": (5, "1>23 2>34 3>45 4>51 5>12"),
    "5B": (5, "1>2 2>3 1>3 4>5 5>123 123>4"),
    "5C": (5, "1>2 2>3 3>1 4>5 5>123 123>4"),
    "5D": (5, "1>2 3>4 4>12 12>3 1>5 3>5 5>2 5>4"),
    "5E": (5, "1>2 4>5 3>45 12>3 45>12"),
    "6A": (6, "1>2 2>34 34>1 4>3 1234>5 5>6 6>1234"),
    "6B": (6, "1>2 6>12 6>3 12>5 12>4 3>4 3>12 5>4 4>6 5>6 5>3"),
    "6C": (6, "1>2 2>3 3>1 4>5 6>45 45>123 123>6"),
    "6D": (6, "1>2 3>4 5>6 12>34 34>56 56>12"),
    "6E": (6, "1>2 6>12 6>3 12>3 12>4 3>4 3>5 4>5 4>6 5>6 5>12"),
    "6F": (6, "1>2 1>5 2>3 2>6 3>1 3>4 4>1 4>2 4>6 5>2 5>3 5>4 6>1 6>3 6>5"),
    "6G": (6, "1>4 1>5 2>1 2>5 3>1 3>2 3>6 4>2 4>3 5>3 5>4 5>6 6>1 6>2 6>4"),
    "6H": (6, "1>2 2>3 3>1 5>4 45>6 123>45 6>123"),
    "6I": (6, "5>4 2>1 3>12 12>45 45>3 5>6 6>4 3>6 1>6 6>2"),
    "6J": (6, "2>1 2>6 1>6 5>4 45>3 126>45 3>126"),
    "6K": (6, "1>2 6>12 6>3 3>12 12>4 4>3 5>3 5>4 6>4 5>6 12>5"),
    "6L": (6, "1>2 1>3 2>3 4>5 6>45 45>123 123>6"),
    "7A": (7, "1>235 2>346 3>457 4>561 5>672 6>713 7>124"),
    "7B": (7, "1>2 3>1 3>2 4>5 5>6 6>4 123>7 7>456 456>123"),
    "7C": (7, "1>2 3>1 2>3 4>5 5>6 6>4 123>7 7>456 456>123"),
    "7D": (7, "1>2 3>4 4>5 5>3 6>7 12>345 345>67 67>12"),
    "7E": (7, "1>2345 3>4 4>5 5>3 6>7 345>2 2345>67 67>1"),
    # block arcs only; see FIGURE_AMBIGUITIES for the single 5-7 arrow of the drawing
    "7F": (7, "1>3 3>2 2>1 4>5 6>7 45>123 123>67 67>45"),
    "7G": (7, "2>3 3>17 17>2 7>1 1237>6 6>45 45>1237 4>5"),
    "7H": (7, "1>2 6>12 6>3 3>12 12>47 47>3 5>3 5>47 6>47 5>6 12>5 7>4"),
    "7I": (7, "4>7 5>4 7>5 457>6 6>123 123>457 3>2 2>1 3>1"),
    "7J": (7, "2>1 1>3 3>2 4>5 5>6 6>4 456>7 4567>2 4567>1 3>456 7>3"),
    "8A": (8, "1>2 12>346 3>4 3>5 3>7 4>5 4>6 4>8 5>6 5>7 5>12 6>7 6>8 6>3 7>8 7>12 7>4 8>12 8>3 8>5"),
    "8B": (8, "8>2 28>1 1>3 3>28 4>5 5>6 6>4 456>7 4567>28 4567>1 3>456 7>3"),
}

# Drawings whose arcs contradict each other. The listed pairs are left open and
# every completion that satisfies all records drawn on the figure is kept.
# In 7F the block arc {6,7} > {4,5} meets a separate arrow from 5 to 7.
FIGURE_AMBIGUITIES: dict[str, tuple[str, tuple[tuple[int, int], ...]]] = {
    "7F": ("1>3 3>2 2>1 4>5 6>7 45>123 123>67", ((4, 6), (4, 7), (5, 6), (5, 7))),
}

# [T;P;S;P_1,...,P_k], P an outpath given by its blocks; copied line by line,
# including the repeated Exc 21 line and the malformed S of Exc 9.
FINITE_EXCEPTIONS = r"""
Exc 0: [3A;(1,1);{1,2,3}]
Exc 1: [4A;(1,1,1);{1,2,3};4213]
Exc 2: [4A;(1,2);{3,4};1324;2314]
Exc 3: [4A;(2,1);{1,2,};3421;4132]
Exc 4: [5A;(1,1,1,1);{1,2,3,4,5}]
Exc 5: [5B;(2,1,1);{1,2,3};45213;51423]
Exc 6: [5C;(1,1,2);{4,5};12534;23514;31524]
Exc 7: [5C;(2,1,1);{1,2,3,4};51432]
Exc 8: [5D;(1,1,1,1);{2,5};12543;35124;42153]
Exc 9: [5E;(1,1,1,1);{2,4,53};12453;35421]
Exc 10: [5E;(1,2,1);{3,5};12435;23145;45312]
Exc 11: [5E;(2,2);{1,2};34215;42315;52314]
Exc 12: [5E;(1,1,2);{1,2};35412;41523;51423]
Exc 13: [6A;(3,1,1);{3,4};156324;256143;562341;612345]
Exc 14: [6B;(2,1,1,1);{3,4};154326;254316;562143;612345]
Exc 15: [6C;(1,1,2,1);{1,2,3,6};435261;534261]
Exc 16: [6C;(1,2,1,1);{4,5,6};163425;263415;362415]
Exc 17: [6D;(2,1,1,1);{2,4,6};124365;346521;562143]
Exc 18: [6D;(1,2,2);{2,4,6};126345;341562;564123]
Exc 19: [6D;(1,1,1,2);{2,4,6};126543;341265;563421]
Exc 20: [6E;(1,1,1,1,1);{1,2};341256;465213;516324;621435]
Exc 21: [6E;(2,1,1,1);{1,2};346521;452136;562143;634125]
Exc 21: [6E;(2,1,1,1);{1,2};346521;452136;562143;634125]
Exc 22: [6F;(1,1,1,1,1);{1,2,3};421563;532641;613452]
Exc 23: [6G;(1,1,1,1,1);{4,6};145632;216453;326415;546132]
Exc 24: [6H;(1,1,1,1,1);{1,2,3,4};543162;613425]
Exc 25: [6H;(1,1,1,2);{4,5};142536;243516;341526;613452]
Exc 26: [6H;(1,1,3);{4,5,6};145623;245631;345612]
Exc 27: [6H;(1,3,1);{4,6};126534;236514;316524;543261]
Exc 28: [6H;(2,1,2);{4,5};124563;234561;314562;614235]
Exc 29: [6I;(1,1,1,1,1);{4,6};145632;213654;365421;546231]
Exc 30: [6J;(1,1,1,1,1);{4,6};162453;261453;312465;542631]
Exc 31: [6K;(1,2,2);{3,4};146532;246531;541632;634125]
Exc 32: [6L;(1,2,1,1);{5,6};163425;263415;361425;456132]
Exc 33: [7A;(1,1,1,1,1,1);{1,2,3,4,5,6,7}]
Exc 34: [7B;(1,1,2,1,1);{1,2,3};4576132;5674132;6475132;7541263]
Exc 35: [7B;(2,1,3);{1,2,3};4315627;5316427;6314527;7435612]
Exc 36: [7B;(2,3,1);{1,2};3125476;4567132;5647132;6457132;7421356]
Exc 37: [7C;(1,1,1,1,1,1);{4,5,6};1243567;2341567;3142567;7541632]
Exc 38: [7C;(1,1, 2,1,1);{1,2,3};4156327;5164327;6145327;7541263]
Exc 39: [7C;(2,1,3);{1,2,3};4315627;5316427;6314527;7435612]
Exc 40: [7D;(1,1,1,2,1);{1,2};3412756;4512736;5312746;6215437;7215436]
Exc 41: [7D;(1,1,1,3);{6,7};1546327;2546317;3745216;4753216;5734216]
Exc 42: [7D;(2,2,1,1);{6,7};1342675;2341675;3465127;4563127;5364127]
Exc 43: [7E;(1,1,2,1,1);{2,7};1236745;3214756;4213756;5213746;6734215]
Exc 44: [7F;(1,1,1,3);{6,7};1732546;2713546;3721546;4127635;5127634]
Exc 45: [7G;(2,1,2,1);{1,7};2654317;3654721;4367125;5367124;6517234]
Exc 46: [7H;(2,2,2);{4,7};1746532;2746531;3126574;5321674;6247531]
Exc 47: [7I;(1,1,2,1,1);{4,5,7};1456237;2456137;3456127;6135427]
Exc 48: [7J;(1,1,2,1,1);{1,2};3245167;4235167;5234167;6234157;7234156]
Exc 49: [8A;(1,1,1,1,1,1,1);{1,2};35461278;46527183;56487213;67341285;74358216;85347216]
Exc 50: [8A;(2,1,1,1,1,1);{1,2};34652718;46752138;56734128;68214375;78216453;83412576]
Exc 51: [8B;(2,1,2,1,1);{2,8};13245867;32145867;42156873;52164873;62145873;73245861]
"""
