//! Frozen reference values for J_nu(x), 50-digit evaluations rounded to
//! f64. Coverage crosses every dispatch region: small argument, large
//! order, the large-argument expansion, and the recurrence band between.

pub const GRID: &[(f64, f64, f64)] = &[
    (-2.0, 0.05, 0.00031243490091938446674),
    (-2.0, 0.5, 0.030604023458682641307),
    (-2.0, 2.0, 0.35283402861563771915),
    (-2.0, 8.0, -0.11299172042407525),
    (-2.0, 14.0, -0.15201988258205962291),
    (-2.0, 15.9, 0.17855891333008130456),
    (-2.0, 16.1, 0.19196523515132911664),
    (-2.0, 21.0, -0.020281902166205590301),
    (-2.0, 28.0, 0.082482116858649170579),
    (-2.0, 31.0, -0.059790359283014132566),
    (-2.0, 45.0, -0.11455872158985967792),
    (-2.0, 80.0, 0.068340733095317208402),
    (-2.0, 200.0, 0.014894394548741309365),
    (-2.0, 600.0, 0.022067837056468974034),
    (-2.0, 1000.0, -0.024777229528605995513),
    (-2.0, 25000.0, 0.000044730033360437408852),
    (-2.0, 100000.0, 0.0017192380513872298439),
    (-1.99, 0.05, -15.362835315108960497),
    (-1.99, 0.5, -0.1366680904795639451),
    (-1.99, 2.0, 0.33620697514153671369),
    (-1.99, 8.0, -0.11774234122681870722),
    (-1.99, 14.0, -0.15457666688870515491),
    (-1.99, 15.9, 0.17696654367219096937),
    (-1.99, 16.1, 0.19100538530372115993),
    (-1.99, 21.0, -0.023165308500769056668),
    (-1.99, 28.0, 0.080393814260621827547),
    (-1.99, 31.0, -0.057649789720489528721),
    (-1.99, 45.0, -0.1150631802820854607),
    (-1.99, 80.0, 0.069247122628024202518),
    (-1.99, 200.0, 0.015752730599299361291),
    (-1.99, 600.0, 0.021687969261887185839),
    (-1.99, 1000.0, -0.024849112876798685993),
    (-1.99, 25000.0, 0.00012398871330359770544),
    (-1.99, 100000.0, 0.0016900183775143413487),
    (-1.5, 0.05, -71.45411510578295772),
    (-1.5, 0.5, -2.5214655504213378514),
    (-1.5, 2.0, -0.39562328135870351708),
    (-1.5, 8.0, -0.27396220835345042862),
    (-1.5, 14.0, -0.21332343567793571157),
    (-1.5, 15.9, 0.050543715818829177321),
    (-1.5, 16.1, 0.087389109875750424233),
    (-1.5, 21.0, -0.14113109281424362035),
    (-1.5, 28.0, -0.035664963408063932416),
    (-1.5, 31.0, 0.053671733807781972178),
    (-1.5, 45.0, -0.1025963363967808594),
    (-1.5, 80.0, 0.088784126151671009196),
    (-1.5, 200.0, 0.049133090737118573826),
    (-1.5, 600.0, -0.0013849408623307532287),
    (-1.5, 1000.0, -0.020877456174464755024),
    (-1.5, 25000.0, 0.0035998607377210103689),
    (-1.5, 100000.0, -0.000090173739588778401264),
    (-1.0, 0.05, -0.024992188313759700519),
    (-1.0, 0.5, -0.24226845767487388638),
    (-1.0, 2.0, -0.5767248077568733872),
    (-1.0, 8.0, -0.23463634685391462438),
    (-1.0, 14.0, -0.13337515469879325311),
    (-1.0, 15.9, -0.10802789006306502792),
    (-1.0, 16.1, -0.071979418622449990505),
    (-1.0, 21.0, -0.17112027276390010384),
    (-1.0, 28.0, -0.13055148833509379348),
    (-1.0, 31.0, 0.13302431666631419837),
    (-1.0, 45.0, -0.028348854376424527534),
    (-1.0, 80.0, 0.05605729667571257751),
    (-1.0, 200.0, 0.054304538182378222711),
    (-1.0, 600.0, -0.024014365301107028418),
    (-1.0, 1000.0, -0.0047283119070895239176),
    (-1.0, 25000.0, 0.0050460641055336799759),
    (-1.0, 100000.0, -0.0018467575628825677164),
    (-0.3333333333333333, 0.05, 2.5232265152746971939),
    (-0.3333333333333333, 0.5, 1.0644204672306240593),
    (-0.3333333333333333, 2.0, -0.075749980285132305154),
    (-0.3333333333333333, 8.0, 0.034982266456759839803),
    (-0.3333333333333333, 14.0, 0.083794338818566032363),
    (-0.3333333333333333, 15.9, -0.19952077080033532035),
    (-0.3333333333333333, 16.1, -0.19724973069255625697),
    (-0.3333333333333333, 21.0, -0.053863471577317068131),
    (-0.3333333333333333, 28.0, -0.12943224123559606841),
    (-0.3333333333333333, 31.0, 0.11142865733019020463),
    (-0.3333333333333333, 45.0, 0.086672399196604492626),
    (-0.3333333333333333, 80.0, -0.032530789136521108745),
    (-0.3333333333333333, 200.0, 0.013778879715961599519),
    (-0.3333333333333333, 600.0, -0.031059235477096886267),
    (-0.3333333333333333, 1000.0, 0.019107025982797277597),
    (-0.3333333333333333, 25000.0, 0.0024839544155524155969),
    (-0.3333333333333333, 100000.0, -0.0024122553312836927529),
    (-0.25, 0.05, 2.0505445259036367864),
    (-0.25, 0.5, 1.0595995935275231736),
    (-0.25, 2.0, 0.0035869156241729160775),
    (-0.25, 8.0, 0.072008522078769338268),
    (-0.25, 14.0, 0.10897780412579270976),
    (-0.25, 15.9, -0.19580826043047491909),
    (-0.25, 16.1, -0.19881079370831551095),
    (-0.25, 21.0, -0.031594338377272880223),
    (-0.25, 28.0, -0.11814679557239907098),
    (-0.25, 31.0, 0.098632079512696777199),
    (-0.25, 45.0, 0.096599499418742025285),
    (-0.25, 80.0, -0.043117983195828893723),
    (-0.25, 200.0, 0.0065130373640730912449),
    (-0.25, 600.0, -0.029511696305108017506),
    (-0.25, 1000.0, 0.021094776081290359953),
    (-0.25, 25000.0, 0.0018893525163559682719),
    (-0.25, 100000.0, -0.0022950618636020190171),
    (0.0, 0.05, 0.99937509764946858081),
    (0.0, 0.5, 0.93846980724081290423),
    (0.0, 2.0, 0.22389077914123566805),
    (0.0, 8.0, 0.17165080713755390609),
    (0.0, 14.0, 0.17107347611045865906),
    (0.0, 15.9, -0.16497049948567060953),
    (0.0, 16.1, -0.18302369246531048507),
    (0.0, 21.0, 0.036579071000862743048),
    (0.0, 28.0, -0.073157010548999613902),
    (0.0, 31.0, 0.0512081453045422488),
    (0.0, 45.0, 0.11581867067325632359),
    (0.0, 80.0, -0.06974216551221002284),
    (0.0, 200.0, -0.015437439930565091592),
    (0.0, 600.0, -0.021987789172131950606),
    (0.0, 1000.0, 0.024786686152420174561),
    (0.0, 25000.0, -0.00004513371848888010325),
    (0.0, 100000.0, -0.0017192011162359721926),
    (0.3333333333333333, 0.05, 0.32729164001955059773),
    (0.3333333333333333, 0.5, 0.67283082949794601887),
    (0.3333333333333333, 2.0, 0.44293981814857620298),
    (0.3333333333333333, 8.0, 0.25977616110834965293),
    (0.3333333333333333, 14.0, 0.21168092934398271834),
    (0.3333333333333333, 15.9, -0.086929421079396517407),
    (0.3333333333333333, 16.1, -0.12025150365138550422),
    (0.3333333333333333, 21.0, 0.11644503299503828482),
    (0.3333333333333333, 28.0, 0.0022635714828125579622),
    (0.3333333333333333, 31.0, -0.022315927407286311204),
    (0.3333333333333333, 45.0, 0.11387616964518320122),
    (0.3333333333333333, 80.0, -0.088199784400034555653),
    (0.3333333333333333, 200.0, -0.04049121924691607211),
    (0.3333333333333333, 600.0, -0.0070285895279188472027),
    (0.3333333333333333, 1000.0, 0.023824321121563927231),
    (0.3333333333333333, 25000.0, -0.0025621088868066442468),
    (0.3333333333333333, 100000.0, -0.00056549012752551502423),
    (0.5, 0.05, 0.17833808240219742789),
    (0.5, 0.5, 0.54097378993452809133),
    (0.5, 2.0, 0.51301613656182775167),
    (0.5, 8.0, 0.27909280857099206145),
    (0.5, 14.0, 0.21124069716285923437),
    (0.5, 15.9, -0.038190310625656255216),
    (0.5, 16.1, -0.075975168639522158093),
    (0.5, 21.0, 0.14567236007282468436),
    (0.5, 28.0, 0.040848802572454095843),
    (0.5, 31.0, -0.057900330936878658107),
    (0.5, 45.0, 0.10120783324271412176),
    (0.5, 80.0, -0.088661035811765458475),
    (0.5, 200.0, -0.049270523842854474976),
    (0.5, 600.0, 0.0014391770157982811529),
    (0.5, 1000.0, 0.02086326660509382773),
    (0.5, 25000.0, -0.0036000021860870235366),
    (0.5, 100000.0, 0.000090198954786323198069),
    (1.0, 0.05, 0.024992188313759700519),
    (1.0, 0.5, 0.24226845767487388638),
    (1.0, 2.0, 0.5767248077568733872),
    (1.0, 8.0, 0.23463634685391462438),
    (1.0, 14.0, 0.13337515469879325311),
    (1.0, 15.9, 0.10802789006306502792),
    (1.0, 16.1, 0.071979418622449990505),
    (1.0, 21.0, 0.17112027276390010384),
    (1.0, 28.0, 0.13055148833509379348),
    (1.0, 31.0, -0.13302431666631419837),
    (1.0, 45.0, 0.028348854376424527534),
    (1.0, 80.0, -0.05605729667571257751),
    (1.0, 200.0, -0.054304538182378222711),
    (1.0, 600.0, 0.024014365301107028418),
    (1.0, 1000.0, 0.0047283119070895239176),
    (1.0, 25000.0, -0.0050460641055336799759),
    (1.0, 100000.0, 0.0018467575628825677164),
    (2.0, 0.05, 0.00031243490091938446674),
    (2.0, 0.5, 0.030604023458682641307),
    (2.0, 2.0, 0.35283402861563771915),
    (2.0, 8.0, -0.11299172042407525),
    (2.0, 14.0, -0.15201988258205962291),
    (2.0, 15.9, 0.17855891333008130456),
    (2.0, 16.1, 0.19196523515132911664),
    (2.0, 21.0, -0.020281902166205590301),
    (2.0, 28.0, 0.082482116858649170579),
    (2.0, 31.0, -0.059790359283014132566),
    (2.0, 45.0, -0.11455872158985967792),
    (2.0, 80.0, 0.068340733095317208402),
    (2.0, 200.0, 0.014894394548741309365),
    (2.0, 600.0, 0.022067837056468974034),
    (2.0, 1000.0, -0.024777229528605995513),
    (2.0, 25000.0, 0.000044730033360437408852),
    (2.0, 100000.0, 0.0017192380513872298439),
    (3.5, 0.05, 2.1236623038279168607e-7),
    (3.5, 0.5, 0.00066237856814594236085),
    (3.5, 2.0, 0.068517549985127069605),
    (3.5, 8.0, -0.23256798563458326411),
    (3.5, 14.0, -0.062450152275957166889),
    (3.5, 15.9, -0.17049606129567127618),
    (3.5, 16.1, -0.14508969683171645975),
    (3.5, 21.0, -0.13350757954348255232),
    (3.5, 28.0, -0.15109584238868482258),
    (3.5, 31.0, 0.14021777801559400227),
    (3.5, 45.0, 0.048542089508255725635),
    (3.5, 80.0, -0.0031771675591129053295),
    (3.5, 200.0, 0.028954336997303466166),
    (3.5, 600.0, -0.032554727846895200811),
    (3.5, 1000.0, 0.014064177240705166524),
    (3.5, 25000.0, 0.0035370730659813771707),
    (3.5, 100000.0, -0.0025215251626346866997),
    (7.0, 0.05, 1.2109203976980754143e-15),
    (7.0, 0.5, 1.2015867327763022876e-8),
    (7.0, 2.0, 0.00017494407486827416851),
    (7.0, 8.0, 0.32058907797982630386),
    (7.0, 14.0, -0.15080491964126707159),
    (7.0, 15.9, 0.17307297797724264089),
    (7.0, 16.1, 0.19042560605309561259),
    (7.0, 21.0, -0.10215058242709553288),
    (7.0, 28.0, -0.028214958354485381987),
    (7.0, 31.0, 0.05814851619507590257),
    (7.0, 45.0, -0.083727351754599594137),
    (7.0, 80.0, 0.074209453807985677372),
    (7.0, 200.0, 0.055762660213175076655),
    (7.0, 600.0, -0.023115839461298983935),
    (7.0, 1000.0, -0.0053217830764436153538),
    (7.0, 25000.0, 0.0050461051086716674518),
    (7.0, 100000.0, -0.0018463449014313543154),
    (10.0, 0.05, 2.6279214389787748715e-23),
    (10.0, 0.5, 2.6131773608228030862e-13),
    (10.0, 2.0, 2.5153862827167367096e-7),
    (10.0, 8.0, 0.060767026774251156317),
    (10.0, 14.0, 0.085006705446061017811),
    (10.0, 15.9, -0.19949958058561517297),
    (10.0, 16.1, -0.21161796712783112439),
    (10.0, 21.0, 0.14853180559607407769),
    (10.0, 28.0, 0.11521481077214949139),
    (10.0, 31.0, -0.1344198408579178257),
    (10.0, 45.0, -0.026971402475010786252),
    (10.0, 80.0, 0.024043850978184763441),
    (10.0, 200.0, 0.0015301688136801641061),
    (10.0, 600.0, 0.023913593761650189622),
    (10.0, 1000.0, -0.024520622306036558192),
    (10.0, 25000.0, 0.000035041509821699235829),
    (10.0, 100000.0, 0.0017201242886778252491),
    (15.5, 0.05, 2.8371771628796586544e-38),
    (15.5, 0.5, 8.9383565180926253797e-23),
    (15.5, 2.0, 1.8132851979389266026e-13),
    (15.5, 8.0, 0.00015242596422574968675),
    (15.5, 14.0, 0.089312047908553608645),
    (15.5, 15.9, 0.20426780852090113476),
    (15.5, 16.1, 0.2159966589395349923),
    (15.5, 21.0, -0.064160123243905546372),
    (15.5, 28.0, 0.09112344659386334055),
    (15.5, 31.0, -0.14192092847878237864),
    (15.5, 45.0, -0.10338729442423854171),
    (15.5, 80.0, 0.088658664810564947585),
    (15.5, 200.0, 0.050589334928449067163),
    (15.5, 600.0, -0.032184255721487765299),
    (15.5, 1000.0, 0.011590582363153573087),
    (15.5, 25000.0, 0.0035534486990837607931),
    (15.5, 100000.0, -0.0025216261928354027056),
    (22.0, 0.05, 5.0571029731616013378e-57),
    (22.0, 0.5, 5.0435157742848654563e-35),
    (22.0, 2.0, 8.5179266396289444022e-22),
    (22.0, 8.0, 7.7247709559365491256e-9),
    (22.0, 14.0, 0.00037113893896002029541),
    (22.0, 15.9, 0.0030404191904901229718),
    (22.0, 16.1, 0.0036946279253951497494),
    (22.0, 21.0, 0.10965947893148529356),
    (22.0, 28.0, -0.050241925004374660127),
    (22.0, 31.0, -0.13042724913494538615),
    (22.0, 45.0, -0.10773132248464008435),
    (22.0, 80.0, -0.076303741027644088001),
    (22.0, 200.0, -0.045501027610518062983),
    (22.0, 600.0, 0.02966651766339010689),
    (22.0, 1000.0, -0.02293694688922354696),
    (22.0, 25000.0, -3.7135288603330283144e-6),
    (22.0, 100000.0, 0.0017236652726900569794),
    (29.7, 0.05, 2.752975281190745956e-80),
    (29.7, 0.5, 1.3769779157529215186e-50),
    (29.7, 2.0, 1.0158725329094460268e-32),
    (29.7, 8.0, 4.7198791683513923975e-15),
    (29.7, 14.0, 2.5617177792757705965e-8),
    (29.7, 15.9, 6.8550949467361245671e-7),
    (29.7, 16.1, 9.3950495561919642387e-7),
    (29.7, 21.0, 0.00048524506396291853734),
    (29.7, 28.0, 0.07752172792723445974),
    (29.7, 31.0, 0.19366362882778473522),
    (29.7, 45.0, 0.011666824184508401886),
    (29.7, 80.0, 0.083760494890339308512),
    (29.7, 200.0, -0.038181282210003217058),
    (29.7, 600.0, 0.030308625652699480563),
    (29.7, 1000.0, -0.011439953655832964721),
    (29.7, 25000.0, -0.0023299771313989092583),
    (29.7, 100000.0, 0.0023740256392139440008),
    (30.0, 0.05, 3.2698770962977536176e-81),
    (30.0, 0.5, 3.2633568289139784981e-51),
    (30.0, 2.0, 3.6502562664740971052e-33),
    (30.0, 8.0, 2.5830997825663074768e-15),
    (30.0, 14.0, 1.6775399533577875127e-8),
    (30.0, 15.9, 4.6890474596245507185e-7),
    (30.0, 16.1, 6.4546325218696615604e-7),
    (30.0, 21.0, 0.00036822631001186338759),
    (30.0, 28.0, 0.067685381714681890163),
    (30.0, 31.0, 0.18308722619213799611),
    (30.0, 45.0, 0.045799309554040956079),
    (30.0, 80.0, 0.092327030078832060012),
    (30.0, 200.0, -0.052122279029882832044),
    (30.0, 600.0, 0.032490555125765188508),
    (30.0, 1000.0, -0.020271896981075845238),
    (30.0, 25000.0, -0.000045697853187436209948),
    (30.0, 100000.0, 0.001727494167951443046),
];
