// generated: Chebyshev coefficients on w = 2*(5.0/x)^2 - 1, x >= 5.0
pub(super) const P0: [f64; 23] = [
    1.9973046797553909,
    -0.0013293716212502800,
    1.7613055512905590e-5,
    -6.3193671187330682e-7,
    3.9488255870938078e-8,
    -3.5409678948019085e-9,
    4.1032463668723861e-10,
    -5.7657476626552228e-11,
    9.4231055783919860e-12,
    -1.7401405706283885e-12,
    3.5557750052411781e-13,
    -7.9146415013381161e-14,
    1.8959456362961826e-14,
    -4.8414830191756972e-15,
    1.3078555195901338e-15,
    -3.7140508214131538e-16,
    1.1030231778712770e-16,
    -3.4109362104981142e-17,
    1.0942187869810236e-17,
    -3.6299056737952973e-18,
    1.2418028891673288e-18,
    -4.3705392982944702e-19,
    1.5791690357401110e-19,
];
pub(super) const Q0: [f64; 25] = [
    -0.24729405164334986,
    0.0013190194049922607,
    -3.2187991212661753e-5,
    1.6237093205642788e-6,
    -1.2743289742032806e-7,
    1.3513032763134409e-8,
    -1.7850759051197051e-9,
    2.7908571347903604e-10,
    -4.9889080276528326e-11,
    9.9507136678066448e-12,
    -2.1751206043008832e-12,
    5.1401271624276055e-13,
    -1.2993242656059177e-13,
    3.4837635776889784e-14,
    -9.8400575725437304e-15,
    2.9115274918592000e-15,
    -8.9821511713033442e-16,
    2.8777689065579246e-16,
    -9.5429050117313428e-17,
    3.2658161943648366e-17,
    -1.1505181785326160e-17,
    4.1632042653785897e-18,
    -1.5443691439003656e-18,
    5.8629592355191689e-19,
    -2.2743642238250382e-19,
];
pub(super) const P1: [f64; 23] = [
    2.0045352413706801,
    0.0022437352958079985,
    -2.3071018862548287e-5,
    7.6391817325339051e-7,
    -4.5896852323434006e-8,
    4.0205154784190012e-9,
    -4.5867739771709724e-10,
    6.3731589628592467e-11,
    -1.0327344567640412e-11,
    1.8943274995111032e-12,
    -3.8497033878241052e-13,
    8.5299145257790443e-14,
    -2.0354469786572299e-14,
    5.1804217389005492e-15,
    -1.3953502148258494e-15,
    3.9523601713314259e-16,
    -1.1711170801268030e-16,
    3.6140785647381087e-17,
    -1.1572356053251518e-17,
    3.8324739067449072e-18,
    -1.3090769675043101e-18,
    4.6007673630742317e-19,
    -1.6601747965114710e-19,
];
pub(super) const Q1: [f64; 25] = [
    0.74617469242937276,
    -0.0018705189681051477,
    4.0056994520460303e-5,
    -1.9144028390856320e-6,
    1.4588165107421990e-7,
    -1.5183398644673165e-8,
    1.9799222605895167e-9,
    -3.0659814494376963e-10,
    5.4402335920597531e-11,
    -1.0786652192538468e-11,
    2.3463528317588938e-12,
    -5.5220468565418258e-13,
    1.3909728481393829e-13,
    -3.7181516752164615e-14,
    1.0474063117829167e-14,
    -3.0917842029179122e-15,
    9.5180518310814990e-16,
    -3.0436450667050519e-16,
    1.0075487579997493e-16,
    -3.4426306619813245e-17,
    1.2110503970221687e-17,
    -4.3763889024283272e-18,
    1.6214444005747308e-18,
    -6.1484941486086125e-19,
    2.3825758027579832e-19,
];
pub(super) const P2: [f64; 23] = [
    1.9675325128169402,
    -0.016178845851003939,
    5.3459443150971844e-5,
    -1.3594181217405720e-6,
    7.2244714582575385e-8,
    -5.8908634157111703e-9,
    6.4092768205599664e-10,
    -8.6080042759003728e-11,
    1.3594708084294247e-11,
    -2.4436482579739783e-12,
    4.8850052481761508e-13,
    -1.0676722991867050e-13,
    2.5183289018531238e-14,
    -6.3456493077244619e-15,
    1.6943590139786177e-15,
    -4.7625108004334523e-16,
    1.4015308465457005e-16,
    -4.2985983016323431e-17,
    1.3687809103617608e-17,
    -4.5101610044066998e-18,
    1.5334366408032928e-18,
    -5.3663734114824230e-19,
    1.9288389389680564e-19,
];
pub(super) const Q2: [f64; 26] = [
    3.7617764310980102,
    0.0058064899966082578,
    -7.8330028937758327e-5,
    3.1515456670710598e-6,
    -2.1922660206719607e-7,
    2.1554063719972411e-8,
    -2.7024307005538996e-9,
    4.0654889273622097e-10,
    -7.0543769411809149e-11,
    1.3739368666828851e-11,
    -2.9450612818657043e-12,
    6.8461100675834144e-13,
    -1.7064136613373637e-13,
    4.5198479254690883e-14,
    -1.2630758002195429e-14,
    3.7019995261254852e-15,
    -1.1324385331556950e-15,
    3.6005846195055463e-16,
    -1.1857376222381646e-16,
    4.0323109757138180e-17,
    -1.4123335720334780e-17,
    5.0833577379934361e-18,
    -1.8764041032026598e-18,
    7.0908308406533712e-19,
    -2.7389285787154395e-19,
    1.0798597626668160e-19,
];
pub(super) const P3: [f64; 23] = [
    1.7031286076831106,
    -0.14868870794668356,
    -0.00024919027823854078,
    3.6537647414807266e-6,
    -1.5528271338969961e-7,
    1.1173351691531207e-8,
    -1.1209074461811305e-9,
    1.4212665700832314e-10,
    -2.1495373470817673e-11,
    3.7347312339117892e-12,
    -7.2632462317664188e-13,
    1.5515837063710075e-13,
    -3.5895539936394682e-14,
    8.8954283639625507e-15,
    -2.3409087258828698e-15,
    6.4960391645714874e-16,
    -1.8899894488326629e-16,
    5.7376600506517176e-17,
    -1.8101717943653914e-17,
    5.9145090439399025e-18,
    -1.9954688096827924e-18,
    6.9339771020944588e-19,
    -2.4760278427728524e-19,
];
pub(super) const Q3: [f64; 26] = [
    8.6163047436971336,
    -0.066585902372120902,
    0.00025389476712434768,
    -7.3520753260479200e-6,
    4.3486050940452144e-7,
    -3.8746852307517846e-8,
    4.5436329888135033e-9,
    -6.5091831597978454e-10,
    1.0878116825777452e-10,
    -2.0561245224434381e-11,
    4.3003549310293542e-12,
    -9.7927360532886458e-13,
    2.3983044088806325e-13,
    -6.2564113983062463e-14,
    1.7251499173743638e-14,
    -4.9967885230912931e-15,
    1.5124175217264301e-15,
    -4.7630843873579891e-16,
    1.5550611221444536e-16,
    -5.2466950637440045e-17,
    1.8244250533434858e-17,
    -6.5229382670212964e-18,
    2.3929799761619534e-18,
    -8.9912600331649463e-19,
    3.4544902346734364e-19,
    -1.3551932635432286e-19,
];
