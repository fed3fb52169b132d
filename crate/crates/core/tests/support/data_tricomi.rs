// (a_re, a_im, b, r, theta, U_re, U_im); reference values at 40 digits, rounded to f64
pub const PRINCIPAL: &[(f64, f64, u32, f64, f64, f64, f64)] = &[
    (0.3, 0.2, 1, 0.5, -2.2, 0.7303967888219004, 0.5744118728816944),
    (0.3, 0.2, 1, 0.5, 1.0, 1.2961377874258777, -0.28873647405099107),
    (0.3, 0.2, 2, 0.5, 1.0, 1.8866483646856003, -0.7130073431943679),
    (0.3, 0.2, 3, 0.5, 1.0, 2.5838062169043674, -2.730334680838724),
    (0.3, 0.2, 1, 0.5, 3.1, 1.5909966609281279, -1.1584316528177567),
    (0.3, 0.2, 1, 3.0, -2.2, 0.4403958932347843, 0.2065080071056839),
    (0.3, 0.2, 1, 3.0, -3.14159, 0.28179136403409616, 0.2805520314765055),
    (0.3, 0.2, 2, 3.0, -3.14159, 0.27064264968854745, 0.22031184540120546),
    (0.3, 0.2, 3, 3.0, -3.14159, 0.26488314915210914, 0.19355062862630612),
    (0.3, 0.2, 1, 3.0, 0.0, 0.6861288400926195, -0.17660630888074952),
    (0.3, 0.2, 2, 3.0, 0.0, 0.7618265006396443, -0.15384784798994827),
    (0.3, 0.2, 3, 3.0, 0.0, 0.8674456920899645, -0.11818040257491484),
    (0.3, 0.2, 1, 12.0, 3.1, 0.13657366701420517, -0.874810117738816),
    (0.3, 0.2, 2, 12.0, 3.1, 0.1168482556316272, -0.8558876002598536),
    (0.3, 0.2, 3, 12.0, 3.1, 0.09976250555186235, -0.8385659077019446),
    (0.3, 0.2, 1, 12.0, 0.0, 0.41329251923306537, -0.22919510603901236),
    (0.3, 0.2, 1, 12.0, 1.0, 0.4000741772500633, -0.4112682201791396),
    (0.3, 0.2, 1, 17.0, 0.0, 0.35804032194642926, -0.23119787504346434),
    (0.3, 0.2, 1, 17.0, 1.0, 0.3349487070816464, -0.3955366168495922),
    (0.3, 0.2, 1, 17.0, -3.14159, 0.21211582422091374, 0.0855362630276708),
    (0.3, 0.2, 1, 19.5, 1.0, 0.311265771140531, -0.38854528443664177),
    (0.3, 0.2, 1, 19.5, 0.0, 0.3376997072621774, -0.23102328019879775),
    (0.3, 0.2, 2, 19.5, 0.0, 0.34515453136502156, -0.2311825765296676),
    (0.3, 0.2, 3, 19.5, 0.0, 0.3531016796891886, -0.2312813631418765),
    (0.3, 0.2, 1, 19.5, -3.14159, 0.2057348828170313, 0.07623354882579626),
    (0.3, 0.2, 2, 19.5, -3.14159, 0.20335033978555034, 0.0728684657261606),
    (0.3, 0.2, 3, 19.5, -3.14159, 0.20108934629869235, 0.06975811489966763),
    (0.3, 0.2, 1, 21.0, 0.0, 0.3270412510994768, -0.2307222757521415),
    (0.3, 0.2, 1, 21.0, -3.14159, 0.20229077934627915, 0.07145557546702563),
    (0.3, 0.2, 1, 21.0, -2.2, 0.25963291486204704, 0.01361800510215974),
    (0.3, 0.2, 2, 21.0, -2.2, 0.2553084695316144, 0.01499542780664553),
    (0.3, 0.2, 3, 21.0, -2.2, 0.25111372551568784, 0.016114553187829336),
    (0.3, 0.2, 1, 27.0, -3.14159, 0.19066688185077915, 0.056463803332898424),
    (0.3, 0.2, 1, 27.0, 3.141592653589793, -0.01833696972694805, -0.6984416230743365),
    (0.3, 0.2, 1, 27.0, 1.0, 0.259382828846783, -0.3705561006194774),
    (0.3, 0.2, 2, 27.0, 1.0, 0.26058869329300943, -0.3764014545388773),
    (0.3, 0.2, 3, 27.0, 1.0, 0.2616230563935979, -0.38247734355505114),
    (0.3, 0.2, 1, 35.0, 0.0, 0.25964837090468285, -0.22517645112566645),
    (0.3, 0.2, 1, 35.0, -3.14159, 0.17882743041677035, 0.04280179046287898),
    (0.3, 0.2, 1, 35.0, 1.0, 0.22215580234329824, -0.35510683455410597),
    (0.3, 0.2, 1, 39.0, 3.1, -0.054937808829039064, -0.6176386630659342),
    (0.3, 0.2, 1, 39.0, -3.14159, 0.17395933125937965, 0.03760853455652926),
    (0.3, 0.2, 2, 39.0, -3.14159, 0.1728113448990337, 0.03641149162185686),
    (0.3, 0.2, 3, 39.0, -3.14159, 0.17169549297102915, 0.03526079243711835),
    (0.3, 0.2, 1, 39.0, 1.5707963267948966, 0.16362312891917602, -0.42430038065674147),
    (0.3, 0.2, 2, 39.0, 1.5707963267948966, 0.16123677265342637, -0.4277344053934695),
    (0.3, 0.2, 3, 39.0, 1.5707963267948966, 0.15872396462394137, -0.43110775561247855),
    (0.3, 0.2, 1, 45.0, 1.5707963267948966, 0.14504809944697825, -0.41098106624794745),
    (0.3, 0.2, 1, 45.0, 1.0, 0.18941983922546107, -0.3394887943116131),
    (0.3, 0.2, 1, 45.0, 0.0, 0.23022923477097199, -0.22055864206792614),
    (0.3, 0.2, 1, 200.0, 3.141592653589793, -0.15972713651290638, -0.3475958245709597),
    (0.3, 0.2, 1, 200.0, 3.1, -0.15408308871163273, -0.34665870109461616),
    (0.3, 0.2, 2, 200.0, 3.1, -0.15422747935917205, -0.3459891904476082),
    (0.3, 0.2, 3, 200.0, 3.1, -0.15437008130979743, -0.345323820899389),
    (0.3, 0.2, 1, 200.0, -2.2, 0.1211308224101072, -0.05114387107307195),
    (0.0, 0.029017996, 1, 0.5, 1.0, 1.0300887992259014, 0.01994122842113264),
    (0.0, 0.029017996, 1, 0.5, -2.2, 0.9379079533484229, 0.020220035940416905),
    (0.0, 0.029017996, 1, 0.5, 1.5707963267948966, 1.0469434702001053, 0.01990761731945508),
    (0.0, 0.029017996, 1, 3.0, 0.0, 0.9997383118206326, -0.03188369557726843),
    (0.0, 0.029017996, 1, 3.0, -3.14159, 0.9120782580978696, -0.02905924219786731),
    (0.0, 0.029017996, 1, 3.0, 3.141592653589793, 1.094503996039257, -0.03494673375903017),
    (0.0, 0.029017996, 1, 12.0, -2.2, 0.9356840047195936, -0.0675304536168053),
    (0.0, 0.029017996, 1, 12.0, -3.14159, 0.9104301179283326, -0.06576259878827904),
    (0.0, 0.029017996, 1, 12.0, 3.1, 1.0912023510329478, -0.07882375114236126),
    (0.0, 0.029017996, 1, 17.0, -2.2, 0.9349630804679018, -0.07700181490472614),
    (0.0, 0.029017996, 2, 17.0, -2.2, 0.933594208662582, -0.0778373079291206),
    (0.0, 0.029017996, 3, 17.0, -2.2, 0.9323136785702194, -0.07870642460943013),
    (0.0, 0.029017996, 1, 17.0, 3.1, 1.0903744127941069, -0.08984927094933114),
    (0.0, 0.029017996, 1, 17.0, 0.0, 0.9966703266389193, -0.08212562028410146),
    (0.0, 0.029017996, 1, 19.5, 3.141592653589793, 1.09133192812919, -0.09430161172019409),
    (0.0, 0.029017996, 1, 19.5, 3.1, 1.0900154293041244, -0.09418993834217428),
    (0.0, 0.029017996, 1, 19.5, -2.2, 0.9346520336112728, -0.08072898122334816),
    (0.0, 0.029017996, 1, 21.0, 3.1, 1.0898139142166174, -0.09653390483964258),
    (0.0, 0.029017996, 1, 21.0, -2.2, 0.9344776943882213, -0.08274134760328145),
    (0.0, 0.029017996, 1, 21.0, 1.0, 1.0254478580061355, -0.09086455680155799),
    (0.0, 0.029017996, 2, 21.0, 1.0, 1.026707153660425, -0.09020630793678167),
    (0.0, 0.029017996, 3, 21.0, 1.0, 1.0280261107626223, -0.08957989107774651),
    (0.0, 0.029017996, 1, 27.0, -2.2, 0.9338535463928157, -0.0895614337585077),
    (0.0, 0.029017996, 1, 27.0, 1.0, 1.024753612024545, -0.09833248087182321),
    (0.0, 0.029017996, 1, 27.0, 3.141592653589793, 1.0904065038397899, -0.1046040939523977),
    (0.0, 0.029017996, 1, 35.0, 1.0, 1.023980667654852, -0.10604018246657335),
    (0.0, 0.029017996, 1, 35.0, 3.1, 1.0882815467854432, -0.1126782151997781),
    (0.0, 0.029017996, 1, 35.0, 3.141592653589793, 1.0895959155331179, -0.11281316697000618),
    (0.0, 0.029017996, 1, 39.0, 1.5707963267948966, 1.0407252589655922, -0.1110800797119212),
    (0.0, 0.029017996, 1, 39.0, -3.14159, 0.9076957564362529, -0.0968616146718651),
    (0.0, 0.029017996, 1, 39.0, -2.2, 0.932849099745075, -0.09952902506828876),
    (0.0, 0.029017996, 1, 45.0, 3.1, 1.0874368860732817, -0.12061199239934217),
    (0.0, 0.029017996, 2, 45.0, 3.1, 1.0873888002455467, -0.12131585906293174),
    (0.0, 0.029017996, 3, 45.0, 3.1, 1.0873406663197376, -0.12200404173464213),
    (0.0, 0.029017996, 1, 45.0, 1.0, 1.0231776295603776, -0.11350001198210066),
    (0.0, 0.029017996, 2, 45.0, 1.0, 1.0237721578562722, -0.11320547896233824),
    (0.0, 0.029017996, 3, 45.0, 1.0, 1.0243795428174365, -0.11291816078091446),
    (0.0, 0.029017996, 1, 45.0, 3.141592653589793, 1.0887502210623294, -0.12075678222880283),
    (0.0, 0.029017996, 1, 200.0, 0.0, 0.988208412120232, -0.15314220116741029),
    (0.0, 0.029017996, 2, 200.0, 0.0, 0.9882306522180996, -0.15299882524245917),
    (0.0, 0.029017996, 3, 200.0, 0.0, 0.9882529828174934, -0.15285472922408405),
    (0.0, 0.029017996, 1, 200.0, 3.1, 1.0812152969499667, -0.16755562996563728),
    (0.0, 0.029017996, 2, 200.0, 3.1, 1.0811975533279266, -0.167713380272471),
    (0.0, 0.029017996, 3, 200.0, 3.1, 1.0811798424588397, -0.1678703372005723),
    (0.0, 0.029017996, 1, 200.0, -3.14159, 0.9020974503501827, -0.13979762519794528),
    (0.0, 0.029017996, 2, 200.0, -3.14159, 0.9020771858551326, -0.13992851339741524),
    (0.0, 0.029017996, 3, 200.0, -3.14159, 0.9020570035973846, -0.14005874420389228),
    (1.0, -0.029017996, 1, 0.5, -3.14159, -0.27566479382116293, 1.9604677744906256),
    (1.0, -0.029017996, 1, 0.5, -2.2, 0.40494079069679506, 1.2639009546320144),
    (1.0, -0.029017996, 1, 0.5, 1.5707963267948966, 0.6714469838515942, -0.8386589208730933),
    (1.0, -0.029017996, 1, 3.0, -3.14159, -0.5307323702519232, 0.16110828508461397),
    (1.0, -0.029017996, 1, 3.0, 1.5707963267948966, 0.08750897523854036, -0.27974501990735956),
    (1.0, -0.029017996, 1, 3.0, 0.0, 0.261859679054955, 0.011708921284521981),
    (1.0, -0.029017996, 1, 12.0, 3.141592653589793, -0.08371588646119754, -0.005552452904410001),
    (1.0, -0.029017996, 1, 12.0, -3.14159, -0.10045500017288553, -0.006620554627073141),
    (1.0, -0.029017996, 1, 12.0, 3.1, -0.08347397616111941, -0.009457885729011632),
    (1.0, -0.029017996, 1, 17.0, 3.1, -0.05695590609471747, -0.007036761734712621),
    (1.0, -0.029017996, 2, 17.0, 3.1, -0.05336484973688204, -0.006542151077686201),
    (1.0, -0.029017996, 3, 17.0, 3.1, -0.05022841393702334, -0.006123762107482438),
    (1.0, -0.029017996, 1, 17.0, 0.0, 0.05551153820787747, 0.004746197929147509),
    (1.0, -0.029017996, 2, 17.0, 0.0, 0.05861956479331742, 0.00492567375751597),
    (1.0, -0.029017996, 3, 17.0, 0.0, 0.06207587596660216, 0.00512066435538926),
    (1.0, -0.029017996, 1, 17.0, 1.0, 0.035697305835163805, -0.04238702942625702),
    (1.0, -0.029017996, 2, 17.0, 1.0, 0.03480729592996023, -0.045415408598500025),
    (1.0, -0.029017996, 3, 17.0, 1.0, 0.0335752076532373, -0.048553765148639266),
    (1.0, -0.029017996, 1, 19.5, -2.2, -0.03476144312159444, 0.044007094787481944),
    (1.0, -0.029017996, 2, 19.5, -2.2, -0.03577447640862791, 0.04123625753797178),
    (1.0, -0.029017996, 3, 19.5, -2.2, -0.03648489166420388, 0.03853101156099562),
    (1.0, -0.029017996, 1, 19.5, -3.14159, -0.05920460585123362, -0.0049155619671493985),
    (1.0, -0.029017996, 1, 19.5, 0.0, 0.048695955814259805, 0.004341049001001061),
    (1.0, -0.029017996, 1, 21.0, -2.2, -0.03245879051274006, 0.04061122984756569),
    (1.0, -0.029017996, 2, 21.0, -2.2, -0.03330675893044178, 0.03822120096294438),
    (1.0, -0.029017996, 3, 21.0, -2.2, -0.033914172052719724, 0.035886765762883036),
    (1.0, -0.029017996, 1, 21.0, -3.14159, -0.05472499594727084, -0.004677106676105409),
    (1.0, -0.029017996, 2, 21.0, -3.14159, -0.0519650501660679, -0.0045265549112183945),
    (1.0, -0.029017996, 3, 21.0, -3.14159, -0.04948406072671568, -0.004386630771045181),
    (1.0, -0.029017996, 1, 21.0, 0.0, 0.045354983522722665, 0.004133359776373461),
    (1.0, -0.029017996, 1, 27.0, 3.141592653589793, -0.0350129164533956, -0.0032763806225197607),
    (1.0, -0.029017996, 1, 27.0, -2.2, -0.02566587003136642, 0.030987909844342194),
    (1.0, -0.029017996, 1, 27.0, 1.5707963267948966, 0.0046785837746569515, -0.03507993921704164),
    (1.0, -0.029017996, 2, 27.0, 1.5707963267948966, 0.0033831117487729194, -0.03526284995851471),
    (1.0, -0.029017996, 3, 27.0, 1.5707963267948966, 0.0020720520049294614, -0.03535044855899221),
    (1.0, -0.029017996, 1, 35.0, 3.1, -0.02662726931878348, -0.0038692944629880694),
    (1.0, -0.029017996, 1, 35.0, 1.5707963267948966, 0.00358667347762734, -0.027073762329334745),
    (1.0, -0.029017996, 2, 35.0, 1.5707963267948966, 0.002813672107316792, -0.027175711394884366),
    (1.0, -0.029017996, 3, 35.0, 1.5707963267948966, 0.0020342495509878926, -0.027233655560036915),
    (1.0, -0.029017996, 1, 35.0, 3.141592653589793, -0.026735125568337417, -0.002720410821761619),
    (1.0, -0.029017996, 2, 35.0, 3.141592653589793, -0.02594491444766213, -0.0026638516305839246),
    (1.0, -0.029017996, 3, 35.0, 3.141592653589793, -0.025201375724290518, -0.0026099072916187125),
    (1.0, -0.029017996, 1, 39.0, -2.2, -0.01811916539901233, 0.02095282794398736),
    (1.0, -0.029017996, 1, 39.0, 3.141592653589793, -0.02390819511562273, -0.0025132693223941017),
    (1.0, -0.029017996, 1, 39.0, 1.5707963267948966, 0.003224403298056738, -0.024297863861900873),
    (1.0, -0.029017996, 1, 45.0, 1.0, 0.013751180547672822, -0.0163261260699187),
    (1.0, -0.029017996, 2, 45.0, 1.0, 0.013607664523016812, -0.016772546554852507),
    (1.0, -0.029017996, 3, 45.0, 1.0, 0.013444262270702959, -0.01722431655677083),
    (1.0, -0.029017996, 1, 45.0, -3.14159, -0.024761412591415496, -0.002712415424549142),
    (1.0, -0.029017996, 1, 45.0, -2.2, -0.015807358922136253, 0.01801343859355528),
    (1.0, -0.029017996, 2, 45.0, -2.2, -0.015951116156008686, 0.01749372465928014),
    (1.0, -0.029017996, 3, 45.0, -2.2, -0.01607189031355649, 0.016981750693277287),
    (1.0, -0.029017996, 1, 200.0, -3.14159, -0.0054401914897219995, -0.0008414161787081074),
    (1.0, -0.029017996, 1, 200.0, -2.2, -0.0037533805588455442, 0.003803959743047152),
    (1.0, -0.029017996, 2, 200.0, -2.2, -0.0037586031765957386, 0.0037776673419732862),
    (1.0, -0.029017996, 3, 200.0, -2.2, -0.0037635797107814376, 0.003751483186708934),
    (1.0, -0.029017996, 1, 200.0, 0.0, 0.004916360842730936, 0.000763332764843451),
    (-0.7, 0.5, 1, 0.5, 1.0, 0.23282146776576296, 2.240867772940782),
    (-0.7, 0.5, 1, 0.5, -2.2, -0.35157162268172865, -0.11912325105521328),
    (-0.7, 0.5, 1, 0.5, 1.5707963267948966, 0.05533857098967132, 3.0679833190034773),
    (-0.7, 0.5, 1, 3.0, 1.0, 3.974865755690802, 1.2605625265495932),
    (-0.7, 0.5, 1, 3.0, -3.14159, -0.4891151930264794, -0.09802946961663556),
    (-0.7, 0.5, 1, 3.0, 1.5707963267948966, 4.771652489118212, 3.317897917767554),
    (-0.7, 0.5, 1, 12.0, 1.0, 8.581323542509818, -4.650987126155119),
    (-0.7, 0.5, 1, 12.0, 1.5707963267948966, 13.110230007348662, -1.6419232799154262),
    (-0.7, 0.5, 1, 12.0, -3.14159, -1.1339607838788024, 0.42216156729951615),
    (-0.7, 0.5, 1, 17.0, 1.5707963267948966, 15.830591136333684, -4.96282810512276),
    (-0.7, 0.5, 2, 17.0, 1.5707963267948966, 16.500684909984614, -4.497077800620579),
    (-0.7, 0.5, 3, 17.0, 1.5707963267948966, 17.198039353881963, -4.030612743607563),
    (-0.7, 0.5, 1, 17.0, -2.2, -2.334632978146178, -0.3481742945678671),
    (-0.7, 0.5, 1, 17.0, 3.1, 26.31306438043916, 22.793842928858492),
    (-0.7, 0.5, 1, 19.5, 3.1, 30.434457131256195, 23.146376765091563),
    (-0.7, 0.5, 1, 19.5, 3.141592653589793, 30.344547262447833, 24.474270430871233),
    (-0.7, 0.5, 1, 19.5, -2.2, -2.5970895059733605, -0.2195238039847154),
    (-0.7, 0.5, 2, 19.5, -2.2, -2.6129649684457603, -0.10582952179419297),
    (-0.7, 0.5, 3, 19.5, -2.2, -2.627909426251725, 0.0045589879499562305),
    (-0.7, 0.5, 1, 21.0, 1.0, 9.939382295116285, -10.141945498068264),
    (-0.7, 0.5, 1, 21.0, 3.1, 32.8444261803464, 23.22904270463222),
    (-0.7, 0.5, 1, 21.0, 1.5707963267948966, 17.494964620389915, -7.642241330885491),
    (-0.7, 0.5, 1, 27.0, -3.14159, -1.569178619597961, 1.4071092644095002),
    (-0.7, 0.5, 1, 27.0, 0.0, -0.5062647807926413, -9.947562530935256),
    (-0.7, 0.5, 1, 27.0, 3.1, 42.03468278428605, 22.797234711058344),
    (-0.7, 0.5, 1, 35.0, 1.5707963267948966, 21.097653572953202, -16.765145048146366),
    (-0.7, 0.5, 1, 35.0, 3.141592653589793, 53.715818726867525, 22.815709299935552),
    (-0.7, 0.5, 1, 35.0, 0.0, -2.220895076498957, -11.758925301770942),
    (-0.7, 0.5, 1, 39.0, 3.1, 58.511701813384704, 19.437670998834093),
    (-0.7, 0.5, 1, 39.0, 1.0, 9.500628905747593, -19.486249228123604),
    (-0.7, 0.5, 1, 39.0, 1.5707963267948966, 21.690239488423572, -19.26448772637428),
    (-0.7, 0.5, 1, 45.0, 3.141592653589793, 66.76066040149078, 19.223236317043813),
    (-0.7, 0.5, 1, 45.0, 3.1, 65.94439919385337, 16.943113419766327),
    (-0.7, 0.5, 1, 45.0, 1.5707963267948966, 22.321566069846856, -22.917332219235657),
    (-0.7, 0.5, 1, 200.0, 1.0, -24.72809447275657, -62.73447345735429),
    (-0.7, 0.5, 2, 200.0, 1.0, -24.46442374525511, -62.85514533740081),
    (-0.7, 0.5, 3, 200.0, 1.0, -24.199975528841254, -62.97614878096894),
    (-0.7, 0.5, 1, 200.0, 1.5707963267948966, 2.010585012769255, -89.78897082945751),
    (-0.7, 0.5, 1, 200.0, 0.0, -35.84673724555196, -19.394626687950495),
    (2.5, 0.0, 1, 0.5, 1.0, 0.1302500734961493, -0.20919308574027412),
    (2.5, 0.0, 1, 0.5, -3.14159, -0.9470874157468816, 0.4274982216642066),
    (2.5, 0.0, 1, 0.5, 3.141592653589793, -0.9470904632403263, -0.4274981632973864),
    (2.5, 0.0, 1, 3.0, -3.14159, 0.12900516979056303, -0.16695340002596842),
    (2.5, 0.0, 2, 3.0, -3.14159, 0.17022939588791805, 0.008393246313472656),
    (2.5, 0.0, 3, 3.0, -3.14159, 0.04898389311926561, 0.08907251929141201),
    (2.5, 0.0, 1, 3.0, 1.5707963267948966, -0.0274708923485467, -0.014213338011440802),
    (2.5, 0.0, 1, 3.0, 1.0, -0.0026831911963636026, -0.02274116924151367),
    (2.5, 0.0, 1, 12.0, 0.0, 0.0013065752725430239, 0.0),
    (2.5, 0.0, 1, 12.0, -3.14159, 0.0003698491475648555, 0.0044331050280474096),
    (2.5, 0.0, 1, 12.0, 1.0, -0.0008280028626890301, -0.0012353586150264733),
    (2.5, 0.0, 1, 17.0, 1.0, -0.00042342826621924386, -0.0005316644977658263),
    (2.5, 0.0, 2, 17.0, 1.0, -0.0005152520644028186, -0.0005307882631467786),
    (2.5, 0.0, 3, 17.0, 1.0, -0.0006175623042093111, -0.0005160619038131757),
    (2.5, 0.0, 1, 17.0, 0.0, 0.0006109784943343388, 0.0),
    (2.5, 0.0, 1, 17.0, -2.2, 0.00041726460285998793, -0.0009062230561591951),
    (2.5, 0.0, 1, 19.5, -2.2, 0.0003235802245298684, -0.0006177714002726178),
    (2.5, 0.0, 1, 19.5, 1.5707963267948966, -0.0005057771898980069, 0.0002611919110650511),
    (2.5, 0.0, 2, 19.5, 1.5707963267948966, -0.0004808753855771166, 0.0003277283956365684),
    (2.5, 0.0, 3, 19.5, 1.5707963267948966, -0.0004439771157189553, 0.0003912946095044723),
    (2.5, 0.0, 1, 19.5, -3.14159, 4.6763846486689964e-07, 0.0008828522748290194),
    (2.5, 0.0, 1, 21.0, -2.2, 0.00027899130510750954, -0.0005024150608204804),
    (2.5, 0.0, 1, 21.0, 3.1, 8.667166271770585e-05, -0.0007019627462493195),
    (2.5, 0.0, 1, 21.0, -3.14159, 1.2145099183859042e-07, 0.0007078347128093429),
    (2.5, 0.0, 1, 27.0, -3.14159, 2.9921131025317737e-09, 0.00034388338549623125),
    (2.5, 0.0, 2, 27.0, -3.14159, 2.211733525733504e-09, 0.0003081216998404806),
    (2.5, 0.0, 3, 27.0, -3.14159, 1.882610564989084e-09, 0.00027760515250477145),
    (2.5, 0.0, 1, 27.0, 1.0, -0.00015883726603318265, -0.00016832376141036684),
    (2.5, 0.0, 1, 27.0, 1.5707963267948966, -0.00021844046471790045, 0.000136538874515523),
    (2.5, 0.0, 1, 35.0, 1.5707963267948966, -0.00011150377903874978, 7.777654644677154e-05),
    (2.5, 0.0, 2, 35.0, 1.5707963267948966, -0.00010656063570797993, 8.603149562932221e-05),
    (2.5, 0.0, 3, 35.0, 1.5707963267948966, -0.00010076931241370909, 9.385481860835378e-05),
    (2.5, 0.0, 1, 35.0, 1.0, -8.88129666160906e-05, -8.760155759945512e-05),
    (2.5, 0.0, 1, 35.0, -3.14159, 1.2124383977655537e-09, 0.00016800790829265568),
    (2.5, 0.0, 2, 35.0, -3.14159, 1.0799350193471934e-09, 0.0001549558191724458),
    (2.5, 0.0, 3, 35.0, -3.14159, 9.662630792862269e-10, 0.00014332817112666567),
    (2.5, 0.0, 1, 39.0, 3.1, 1.4003688646376802e-05, -0.00012456268329984302),
    (2.5, 0.0, 1, 39.0, -3.14159, 8.955144951615154e-10, 0.0001253725869988659),
    (2.5, 0.0, 1, 39.0, 0.0, 9.067112800962185e-05, 0.0),
    (2.5, 0.0, 1, 45.0, -3.14159, 6.037649398373219e-10, 8.54836309316087e-05),
    (2.5, 0.0, 1, 45.0, 3.1, 9.442342101118433e-06, -8.49464170056403e-05),
    (2.5, 0.0, 2, 45.0, 3.1, 8.660659846514984e-06, -7.995228874956597e-05),
    (2.5, 0.0, 3, 45.0, 3.1, 7.962279955774523e-06, -7.5369099316635e-05),
    (2.5, 0.0, 1, 45.0, 0.0, 6.460356007063363e-05, 0.0),
    (2.5, 0.0, 2, 45.0, 0.0, 6.801590446485401e-05, 0.0),
    (2.5, 0.0, 3, 45.0, 0.0, 7.168082101087188e-05, 0.0),
    (2.5, 0.0, 1, 200.0, 0.0, 1.7141610172612398e-06, 0.0),
    (2.5, 0.0, 1, 200.0, 1.5707963267948966, -1.2878274241836674e-06, 1.20978304500273e-06),
    (2.5, 0.0, 2, 200.0, 1.5707963267948966, -1.2729117770544752e-06, 1.2260636638432251e-06),
    (2.5, 0.0, 3, 200.0, 1.5707963267948966, -1.2577080858977387e-06, 1.242086928409875e-06),
    (2.5, 0.0, 1, 200.0, -3.14159, 1.2261465784609776e-11, 1.8247608317164395e-06),
    (1.0, 0.029017996, 1, 0.5, 0.0, 0.9230531091604821, -0.015724417585499643),
    (1.0, 0.029017996, 1, 0.5, 3.1, -0.23656115702710703, -1.9235018202911012),
    (1.0, 0.029017996, 1, 0.5, -2.2, 0.4031084128930212, 1.2033257666315298),
    (1.0, 0.029017996, 1, 3.0, 3.141592653589793, -0.530733704653778, -0.16110695199853414),
    (1.0, 0.029017996, 1, 3.0, -2.2, -0.08863666901872697, 0.32422514169786015),
    (1.0, 0.029017996, 1, 3.0, 3.1, -0.5098843224137699, -0.1811738908818151),
    (1.0, 0.029017996, 1, 12.0, 1.0, 0.04312158692317141, -0.06920233173550268),
    (1.0, 0.029017996, 1, 12.0, 3.141592653589793, -0.10045499101897391, 0.006620853812575368),
    (1.0, 0.029017996, 1, 12.0, -3.14159, -0.08371587771425079, 0.0055527023404333305),
    (1.0, 0.029017996, 2, 12.0, -3.14159, -0.0758825898465623, 0.005277979009920362),
    (1.0, 0.029017996, 3, 12.0, -3.14159, -0.06954561396478853, 0.005040569527079026),
    (1.0, 0.029017996, 1, 17.0, -3.14159, -0.05713791612100469, 0.004482129872406774),
    (1.0, 0.029017996, 2, 17.0, -3.14159, -0.05352171731127001, 0.004312171324901999),
    (1.0, 0.029017996, 3, 17.0, -3.14159, -0.05036573068216519, 0.00415603686176905),
    (1.0, 0.029017996, 1, 17.0, 1.0, 0.02962025679711598, -0.05036694959274973),
    (1.0, 0.029017996, 2, 17.0, 1.0, 0.028332809794714076, -0.053428015650777344),
    (1.0, 0.029017996, 3, 17.0, 1.0, 0.026677697841586988, -0.05657354310347743),
    (1.0, 0.029017996, 1, 17.0, 3.1, -0.06863555476961769, 0.0023101234224917823),
    (1.0, 0.029017996, 1, 19.5, 0.0, 0.048695955814259805, -0.004341049001001061),
    (1.0, 0.029017996, 1, 19.5, 3.141592653589793, -0.05920459716600445, 0.004915729183306455),
    (1.0, 0.029017996, 2, 19.5, 3.141592653589793, -0.05597305501225478, 0.004747877587510224),
    (1.0, 0.029017996, 3, 19.5, 3.141592653589793, -0.0530953268265095, 0.00459249918629148),
    (1.0, 0.029017996, 1, 19.5, 1.0, 0.025543977303222977, -0.04434620754438301),
    (1.0, 0.029017996, 1, 21.0, 0.0, 0.045354983522722665, -0.004133359776373461),
    (1.0, 0.029017996, 2, 21.0, 0.0, 0.047429482577757844, -0.004264318147701171),
    (1.0, 0.029017996, 3, 21.0, 0.0, 0.0496937408822919, -0.004404708977094445),
    (1.0, 0.029017996, 1, 21.0, 1.0, 0.023580932971894068, -0.04138148019957809),
    (1.0, 0.029017996, 1, 21.0, -2.2, -0.02207049335238852, 0.04034324535484524),
    (1.0, 0.029017996, 1, 27.0, 1.0, 0.017982706549340536, -0.032662751926641864),
    (1.0, 0.029017996, 1, 27.0, 3.141592653589793, -0.04201566315432358, 0.003931672025665948),
    (1.0, 0.029017996, 1, 27.0, 0.0, 0.03558768675549324, -0.003486100739542134),
    (1.0, 0.029017996, 1, 35.0, 1.5707963267948966, -0.002228768633919431, -0.02973509115149928),
    (1.0, 0.029017996, 1, 35.0, 1.0, 0.013597581512168467, -0.025515419558933338),
    (1.0, 0.029017996, 1, 35.0, 3.141592653589793, -0.03208227545990233, 0.003264505682782531),
    (1.0, 0.029017996, 1, 39.0, 3.1, -0.028755146914364104, 0.0017847698355383402),
    (1.0, 0.029017996, 1, 39.0, 1.0, 0.012103059430414934, -0.02300374945861175),
    (1.0, 0.029017996, 1, 39.0, -2.2, -0.011762877098428234, 0.02142613221468162),
    (1.0, 0.029017996, 2, 39.0, -2.2, -0.01202963444875393, 0.020848202208223397),
    (1.0, 0.029017996, 3, 39.0, -2.2, -0.012263849276549386, 0.02027648662612492),
    (1.0, 0.029017996, 1, 45.0, -3.14159, -0.02063442128976081, 0.0022604498829108693),
    (1.0, 0.029017996, 1, 45.0, 3.1, -0.02482243465205399, 0.0016538034097633972),
    (1.0, 0.029017996, 1, 45.0, 3.141592653589793, -0.024761407222035847, 0.0027124829169997778),
    (1.0, 0.029017996, 1, 200.0, -2.2, -0.00213763302299644, 0.0041920946951243335),
    (1.0, 0.029017996, 2, 200.0, -2.2, -0.002147797110722342, 0.004170784673550231),
    (1.0, 0.029017996, 3, 200.0, -2.2, -0.002157728828730815, 0.004149520455735387),
    (1.0, 0.029017996, 1, 200.0, -3.14159, -0.004533472241026907, 0.0007012017129035667),
    (1.0, 0.029017996, 1, 200.0, 0.0, 0.004916360842730936, -0.000763332764843451),
    (1.0, 0.029017996, 2, 200.0, 0.0, 0.004940931308665576, -0.0007664243205333961),
    (1.0, 0.029017996, 3, 200.0, 0.0, 0.004965746717144488, -0.0007695431274397184),
    (4.5, -1.0, 1, 0.5, 0.0, -0.0023000045160626033, 0.009765772522251498),
    (4.5, -1.0, 2, 0.5, 0.0, -0.005552768522696812, 0.038652652715583866),
    (4.5, -1.0, 3, 0.5, 0.0, -0.013226792136025662, 0.1889183748346373),
    (4.5, -1.0, 1, 0.5, 1.5707963267948966, 0.01320189549468613, -0.0063453906748022456),
    (4.5, -1.0, 1, 0.5, -2.2, -0.010681397580832218, -0.04514086672123769),
    (4.5, -1.0, 2, 0.5, -2.2, 0.1043330251296428, -0.11466407842969023),
    (4.5, -1.0, 3, 0.5, -2.2, 0.5022786692062016, 0.2289441164670283),
    (4.5, -1.0, 1, 3.0, 1.5707963267948966, -0.00015120864501312628, -0.0003905998744283348),
    (4.5, -1.0, 1, 3.0, 1.0, 0.0002694004157953044, -0.00010471115888230273),
    (4.5, -1.0, 1, 3.0, 3.1, 0.007414407125795494, 0.0023418954579467587),
    (4.5, -1.0, 1, 12.0, 3.1, -3.164913136366435e-07, 2.4604148867485227e-05),
    (4.5, -1.0, 1, 12.0, 1.0, 2.2930495731423024e-06, -1.8591934870076755e-06),
    (4.5, -1.0, 1, 12.0, -3.14159, -0.0004523389194238329, 0.0014962912234554942),
    (4.5, -1.0, 1, 17.0, 0.0, -1.155949188585754e-06, -9.396630166476563e-08),
    (4.5, -1.0, 1, 17.0, -2.2, 1.0348542284773696e-05, -2.0304358331070983e-05),
    (4.5, -1.0, 2, 17.0, -2.2, 1.5339245566411887e-05, -1.6784827043554295e-05),
    (4.5, -1.0, 3, 17.0, -2.2, 1.892746662057063e-05, -1.1898981096651552e-05),
    (4.5, -1.0, 1, 17.0, 1.5707963267948966, -7.265893854578723e-07, -6.873229060431374e-08),
    (4.5, -1.0, 1, 19.5, -2.2, 8.937111625137222e-06, -9.454902289941497e-06),
    (4.5, -1.0, 1, 19.5, 0.0, -6.800035417166449e-07, -1.2304906423761646e-07),
    (4.5, -1.0, 2, 19.5, 0.0, -8.173945287870695e-07, -1.2178825410248275e-07),
    (4.5, -1.0, 3, 19.5, 0.0, -9.876743230964512e-07, -1.1524755857517484e-07),
    (4.5, -1.0, 1, 19.5, 3.141592653589793, 3.5453327244222483e-07, 1.551911054347704e-07),
    (4.5, -1.0, 1, 21.0, 0.0, -5.063158293400371e-07, -1.2027739021555114e-07),
    (4.5, -1.0, 1, 21.0, -2.2, 7.5203295291182844e-06, -5.890615568274824e-06),
    (4.5, -1.0, 1, 21.0, 1.5707963267948966, -2.841164013188459e-07, -2.5399784152951164e-08),
    (4.5, -1.0, 1, 27.0, -2.2, 3.2079142594682068e-06, -6.093408859888054e-07),
    (4.5, -1.0, 2, 27.0, -2.2, 3.181536290526819e-06, -4.151030656972058e-08),
    (4.5, -1.0, 3, 27.0, -2.2, 3.0419129190151636e-06, 4.890285080085927e-07),
    (4.5, -1.0, 1, 27.0, -3.14159, -6.819981076941207e-06, -1.89603258825618e-05),
    (4.5, -1.0, 1, 27.0, 1.0, 9.535417777852375e-08, -5.343513472480968e-08),
    (4.5, -1.0, 1, 35.0, 1.0, 3.324150659923565e-08, -1.3813400062643135e-08),
    (4.5, -1.0, 2, 35.0, 1.0, 3.351330650286906e-08, -1.8273447854185258e-08),
    (4.5, -1.0, 3, 35.0, 1.0, 3.3212582817446986e-08, -2.3085838184235073e-08),
    (4.5, -1.0, 1, 35.0, -2.2, 1.0104905504132324e-06, 2.6808457007192534e-07),
    (4.5, -1.0, 1, 35.0, 0.0, -5.569217099696374e-08, -4.064454340213366e-08),
    (4.5, -1.0, 1, 39.0, -3.14159, 6.436083347620831e-07, -2.7441886113223255e-06),
    (4.5, -1.0, 1, 39.0, 1.0, 2.126703374262222e-08, -7.45455259023949e-09),
    (4.5, -1.0, 1, 39.0, -2.2, 5.865958808944676e-07, 2.713709287422639e-07),
    (4.5, -1.0, 2, 39.0, -2.2, 5.347977623894638e-07, 3.3013382358570894e-07),
    (4.5, -1.0, 3, 39.0, -2.2, 4.77278937932213e-07, 3.7894581522577743e-07),
    (4.5, -1.0, 1, 45.0, 1.5707963267948966, -8.315819828969204e-09, -2.85112657257072e-09),
    (4.5, -1.0, 2, 45.0, 1.5707963267948966, -8.508083656664955e-09, -1.9672160692090154e-09),
    (4.5, -1.0, 3, 45.0, 1.5707963267948966, -8.58875786209245e-09, -1.0680031885283958e-09),
    (4.5, -1.0, 1, 45.0, 0.0, -1.642991235583094e-08, -1.8305348479412035e-08),
    (4.5, -1.0, 2, 45.0, 0.0, -1.8286466853572586e-08, -1.968088707683395e-08),
    (4.5, -1.0, 3, 45.0, 0.0, -2.0377500377536873e-08, -2.1176880285699402e-08),
    (4.5, -1.0, 1, 45.0, -2.2, 2.7074499709998003e-07, 2.0724282701295156e-07),
    (4.5, -1.0, 1, 200.0, 1.0, 9.913637548597757e-12, 1.2550348787118243e-11),
    (4.5, -1.0, 2, 200.0, 1.0, 1.0263287724231839e-11, 1.2443940057441413e-11),
    (4.5, -1.0, 3, 200.0, 1.0, 1.061411442967431e-11, 1.2327472153596939e-11),
    (4.5, -1.0, 1, 200.0, -3.14159, 9.684319449400898e-10, 5.794748937738838e-10),
    (4.5, -1.0, 1, 200.0, 3.1, -1.6393987342877264e-12, -1.4690004054031798e-12),
    (0.0, -0.08, 1, 0.5, 3.141592653589793, 0.7676585757643395, -0.052553863739332324),
    (0.0, -0.08, 1, 0.5, 3.1, 0.7706844994171351, -0.0527985048661272),
    (0.0, -0.08, 1, 0.5, 1.5707963267948966, 0.8840464063010133, -0.056756230352025455),
    (0.0, -0.08, 1, 3.0, -2.2, 1.1864849116067024, 0.10688424637792282),
    (0.0, -0.08, 1, 3.0, 3.141592653589793, 0.7726223118092578, 0.06795713724935225),
    (0.0, -0.08, 1, 3.0, 1.0, 0.9208236328749003, 0.07972468923723357),
    (0.0, -0.08, 1, 12.0, 3.141592653589793, 0.7620236463893486, 0.15351559468625892),
    (0.0, -0.08, 1, 12.0, 1.5707963267948966, 0.864655090438409, 0.17370677560478978),
    (0.0, -0.08, 1, 12.0, 1.0, 0.9052846768061462, 0.1819673741925227),
    (0.0, -0.08, 2, 12.0, 1.0, 0.9008552930159975, 0.17764673006853507),
    (0.0, -0.08, 3, 12.0, 1.0, 0.8959298617931829, 0.17348114097221431),
    (0.0, -0.08, 1, 17.0, 1.0, 0.8997574555211064, 0.2072106454467706),
    (0.0, -0.08, 1, 17.0, 0.0, 0.9747795669312216, 0.22480520425987538),
    (0.0, -0.08, 1, 17.0, 3.141592653589793, 0.7575800079504872, 0.1747146439169716),
    (0.0, -0.08, 1, 19.5, 0.0, 0.9722089188363591, 0.23547956100339648),
    (0.0, -0.08, 1, 19.5, 1.5707963267948966, 0.8572033063657036, 0.20732432108439922),
    (0.0, -0.08, 1, 19.5, 3.1, 0.7581769234234111, 0.18362732720068894),
    (0.0, -0.08, 2, 19.5, 3.1, 0.7573081070977921, 0.1867080738609808),
    (0.0, -0.08, 3, 19.5, 3.1, 0.7564771657207162, 0.18962853094579973),
    (0.0, -0.08, 1, 21.0, 1.0, 0.8960772167854562, 0.2224326570945684),
    (0.0, -0.08, 2, 21.0, 1.0, 0.8936606915077795, 0.21986225081035846),
    (0.0, -0.08, 3, 21.0, 1.0, 0.8910808846253722, 0.2173355261619838),
    (0.0, -0.08, 1, 21.0, 3.141592653589793, 0.7545758911100154, 0.18750945171768454),
    (0.0, -0.08, 2, 21.0, 3.141592653589793, 0.7538731234544631, 0.1903867935845886),
    (0.0, -0.08, 3, 21.0, 3.141592653589793, 0.7531922668600887, 0.19312435212848847),
    (0.0, -0.08, 1, 21.0, -2.2, 1.156967578845301, 0.2878115145500542),
    (0.0, -0.08, 2, 21.0, -2.2, 1.1598837605878058, 0.2912742564192578),
    (0.0, -0.08, 3, 21.0, -2.2, 1.1625869200046945, 0.2947697610847115),
    (0.0, -0.08, 1, 27.0, 0.0, 0.9656654351503132, 0.2606838427829301),
    (0.0, -0.08, 1, 27.0, -2.2, 1.1510095327325183, 0.31095870840187256),
    (0.0, -0.08, 1, 27.0, 3.141592653589793, 0.7507070442664628, 0.20265536286897431),
    (0.0, -0.08, 1, 35.0, 1.0, 0.8861557469281429, 0.2589256903157493),
    (0.0, -0.08, 2, 35.0, 1.0, 0.8847705480236854, 0.25732857000520293),
    (0.0, -0.08, 3, 35.0, 1.0, 0.8833261350898135, 0.2557448283188058),
    (0.0, -0.08, 1, 35.0, 0.0, 0.9599953573680505, 0.28065931861695953),
    (0.0, -0.08, 2, 35.0, 0.0, 0.9606417378313914, 0.27846649124305023),
    (0.0, -0.08, 3, 35.0, 0.0, 0.9613017128586113, 0.2762095639298116),
    (0.0, -0.08, 1, 35.0, -2.2, 1.1443567829342447, 0.3347443678239182),
    (0.0, -0.08, 1, 39.0, 0.0, 0.9575122488919842, 0.2889541092094969),
    (0.0, -0.08, 1, 39.0, 3.1, 0.7469605633456133, 0.22540900329069666),
    (0.0, -0.08, 2, 39.0, 3.1, 0.7464380151756407, 0.22692190820368066),
    (0.0, -0.08, 3, 39.0, 3.1, 0.7459273267130743, 0.22839538213557758),
    (0.0, -0.08, 1, 39.0, -2.2, 1.1414337082460224, 0.34462437834534704),
    (0.0, -0.08, 1, 45.0, 0.0, 0.9541212350624741, 0.2998901136132046),
    (0.0, -0.08, 1, 45.0, 1.5707963267948966, 0.8413710578428877, 0.2643196818603618),
    (0.0, -0.08, 2, 45.0, 1.5707963267948966, 0.8398726397984173, 0.2638488831265242),
    (0.0, -0.08, 3, 45.0, 1.5707963267948966, 0.8383664068348335, 0.26341227964864955),
    (0.0, -0.08, 1, 45.0, -2.2, 1.1374345535831938, 0.3576525711971135),
    (0.0, -0.08, 1, 200.0, 3.1, 0.7112803726217325, 0.32094054738411115),
    (0.0, -0.08, 1, 200.0, 0.0, 0.9115350610011387, 0.4112999825452026),
    (0.0, -0.08, 2, 200.0, 0.0, 0.9116997260657392, 0.4109354341179078),
    (0.0, -0.08, 3, 200.0, 0.0, 0.9118650693840804, 0.41056899735137087),
    (0.0, -0.08, 1, 200.0, -2.2, 1.0868812572496882, 0.4904530646240481),
    (-1.0, 0.02, 1, 0.5, -3.14159, -1.4082826914256448, 0.017745754833222493),
    (-1.0, 0.02, 1, 0.5, 1.0, -0.7508352804635771, 0.4599030316328312),
    (-1.0, 0.02, 1, 0.5, 1.5707963267948966, -1.039224047548798, 0.5431950695544752),
    (-1.0, 0.02, 1, 3.0, 1.0, 0.6911499008250054, 2.6017132439707145),
    (-1.0, 0.02, 1, 3.0, -2.2, -2.6955626269596578, -2.224176601205002),
    (-1.0, 0.02, 2, 3.0, -2.2, -3.6464700261078344, -2.180569194045376),
    (-1.0, 0.02, 3, 3.0, -2.2, -4.594076133003539, -2.132687306379753),
    (-1.0, 0.02, 1, 3.0, -3.14159, -3.754224937390503, 0.1200623903231872),
    (-1.0, 0.02, 1, 12.0, -3.14159, -12.190988978041835, 0.6439486255657171),
    (-1.0, 0.02, 1, 12.0, 3.141592653589793, -13.82336949666372, 0.7302076765471852),
    (-1.0, 0.02, 1, 12.0, 3.1, -13.77447379817626, 1.2592803746840926),
    (-1.0, 0.02, 2, 12.0, 3.1, -14.835981644766589, 1.3351604251006892),
    (-1.0, 0.02, 3, 12.0, 3.1, -15.8974373885199, 1.4126655724565673),
    (-1.0, 0.02, 1, 17.0, -3.14159, -16.8741837676773, 0.9947694998541443),
    (-1.0, 0.02, 1, 17.0, 1.5707963267948966, -0.03400392308720355, 17.614033291171726),
    (-1.0, 0.02, 1, 17.0, 3.141592653589793, -19.13364640506015, 1.1280178115477857),
    (-1.0, 0.02, 1, 19.5, -3.14159, -19.2150041553475, 1.1804567533177088),
    (-1.0, 0.02, 2, 19.5, -3.14159, -20.151238586479668, 1.2559220939894087),
    (-1.0, 0.02, 3, 19.5, -3.14159, -21.08740046530613, 1.3322985010384103),
    (-1.0, 0.02, 1, 19.5, 3.141592653589793, -21.787903777289866, 1.3385757660268032),
    (-1.0, 0.02, 2, 19.5, 3.141592653589793, -22.849500675830487, 1.42414597044259),
    (-1.0, 0.02, 3, 19.5, 3.141592653589793, -23.911015309852473, 1.5107492338865294),
    (-1.0, 0.02, 1, 19.5, 1.0, 10.708115114404258, 16.173734815924277),
    (-1.0, 0.02, 1, 21.0, 0.0, 19.96575902367458, -1.1771541008564443),
    (-1.0, 0.02, 1, 21.0, 3.1, -23.284944587670363, 2.392993534207029),
    (-1.0, 0.02, 1, 21.0, 3.141592653589793, -23.38020818300961, 1.4680660107089019),
    (-1.0, 0.02, 1, 27.0, 3.141592653589793, -29.747747589663952, 2.0064057171197325),
    (-1.0, 0.02, 2, 27.0, 3.141592653589793, -30.808796881843147, 2.0985815887118453),
    (-1.0, 0.02, 3, 27.0, 3.141592653589793, -31.869780962700272, 2.1915143589829893),
    (-1.0, 0.02, 1, 27.0, 1.0, 15.362404372958293, 22.255927066581258),
    (-1.0, 0.02, 1, 27.0, 3.1, -29.619541848464383, 3.1949941298477746),
    (-1.0, 0.02, 2, 27.0, 3.1, -30.67974154366284, 3.2870961189205836),
    (-1.0, 0.02, 3, 27.0, 3.1, -31.739906369933266, 3.379956405858613),
    (-1.0, 0.02, 1, 35.0, -3.14159, -33.719175208186556, 2.4392888706998126),
    (-1.0, 0.02, 1, 35.0, 1.5707963267948966, 1.540045257942828, 36.140205896562456),
    (-1.0, 0.02, 2, 35.0, 1.5707963267948966, 0.5116185203676497, 36.234171921259424),
    (-1.0, 0.02, 3, 35.0, 1.5707963267948966, -0.517394021538254, 36.32820838164369),
    (-1.0, 0.02, 1, 35.0, 0.0, 33.91731605519194, -2.3757287246030914),
    (-1.0, 0.02, 1, 39.0, -2.2, -25.064751999809975, -28.37704248690072),
    (-1.0, 0.02, 2, 39.0, -2.2, -26.01731014207334, -28.28765796399603),
    (-1.0, 0.02, 3, 39.0, -2.2, -26.969457836399844, -28.198017826825893),
    (-1.0, 0.02, 1, 39.0, 0.0, 37.90136292939449, -2.741952211659946),
    (-1.0, 0.02, 1, 39.0, 1.5707963267948966, 1.9204268386187884, 40.25337097166664),
    (-1.0, 0.02, 2, 39.0, 1.5707963267948966, 0.8922659598502602, 40.349555733349156),
    (-1.0, 0.02, 3, 39.0, 1.5707963267948966, -0.13642064715516924, 40.445803300959945),
    (-1.0, 0.02, 1, 45.0, 3.141592653589793, -48.83743762121961, 3.7680708035931856),
    (-1.0, 0.02, 1, 45.0, 3.1, -48.60412074649923, 5.746833181631876),
    (-1.0, 0.02, 2, 45.0, 3.1, -49.663347458929316, 5.849447218445556),
    (-1.0, 0.02, 3, 45.0, 3.1, -50.72254852085107, 5.95252300525682),
    (-1.0, 0.02, 1, 45.0, 1.5707963267948966, 2.506547410892018, 46.42126170812045),
    (-1.0, 0.02, 1, 200.0, -2.2, -129.31550061235959, -141.81851448714048),
    (-1.0, 0.02, 1, 200.0, 0.0, 197.88840033458982, -21.008127379642577),
    (-1.0, 0.02, 2, 200.0, 0.0, 196.8961103241011, -20.88257039390627),
    (-1.0, 0.02, 3, 200.0, 0.0, 195.90380768511366, -20.757113132045916),
    (-1.0, 0.02, 1, 200.0, -3.14159, -187.69630435049476, 20.001547867729673),
];

// (a_re, a_im, r, theta on the universal cover, Psi_re, Psi_im, dPsi_re, dPsi_im)
pub const COVER: &[(f64, f64, f64, f64, f64, f64, f64, f64)] = &[
    (0.0, 0.08484211680474588, 9.0, -0.44314265048399903, 0.947133293518031, -0.17833271488069063, 0.0022468825254606463, -0.008834456718948424),
    (0.7100912718085173, -0.6201959373852561, 30.0, 0.10955947918461018, -0.03918769369214158, 0.073584400613845, -0.0008001113407665255, -0.0024383627097347934),
    (0.25976544043360383, 0.5859537450399053, 0.7, -0.49134299463561426, 1.0530621429782343, 0.09058283820158741, -0.1642740841628045, -0.7879471612650338),
    (-0.7164097414810877, 0.07738701715535701, 22.0, 1.2369656025268059, 7.875210642379547, 6.244634976810758, 0.2523080881294057, -0.2151044846213944),
    (0.0, -0.009401026883836788, 22.0, 1.0631768821228507, 0.9896389207491849, 0.02876258689173998, 0.00036367547141502663, 0.0002164640352946183),
    (-0.6850118097196751, -0.9699985261007902, 14.0, -4.018882735461964, 269.92863968480395, -41.02236302431368, 0.4933160970256428, -23.54621530162062),
    (-0.9286944390802345, 0.7591299450687021, 14.0, -4.323240179131945, 0.46460698614208795, 0.11666546214178138, -0.02922118576528941, -0.024741979136766686),
    (-0.07213107755343096, -0.11893776668668643, 30.0, -2.803043326914744, 1.7469777795064916, 0.35957413603250377, -0.005204249140443566, -0.006387505920083916),
    (0.0, -0.09908124556772482, 0.7, -0.3925650892840693, 1.0484995014438265, -0.033527915197255884, -0.060641406528478624, 0.13183757878911026),
    (-0.4436742006722283, 0.9953124009261687, 30.0, -3.8345280072700345, 0.03991021425099487, 0.0910952919560439, -0.0026440008388192737, -0.002289266949544661),
    (-0.49201051421050424, 0.5159800980935378, 14.0, -1.9408324847093401, -0.8930972236725746, -0.9430499967003236, 0.02775305766259368, -0.06173226088283358),
    (-0.8595530008801482, 0.532575772820814, 9.0, -3.6082114324825305, -0.3910610422228668, 0.9809058410861897, 0.031001046885123222, -0.10225442988198219),
    (0.0, -0.09662190549476479, 22.0, -4.594986579088752, 1.490200370460944, 0.4578815310296384, 0.006955569531147043, 0.0010835518593190594),
    (-0.5805651705407777, 0.8205438562083629, 9.0, -1.1457384689204235, -0.9291182457796782, -0.8864284106174791, -0.092484265168507, -0.13363550788596432),
    (0.4177982866380272, -0.1604171980464706, 14.0, 1.190985192553022, 0.2748709580126937, -0.01673234794256629, 0.00014954390751565084, 0.008770159854749495),
    (0.5570217173533016, -0.4604488262997146, 0.7, -1.736871413441094, 1.176590240874935, 1.3677922424355782, 0.2264604024954904, -1.2230038625825184),
    (0.0, 0.08456954079567144, 2.0, -2.333230870183204, 0.8180659391846985, -0.045167099792273596, 0.02726079613125073, 0.023906985859211013),
    (-0.7979073820865898, -0.8802131941178466, 30.0, -0.12122571442545382, -16.27233474616676, 4.86251242742325, -0.5261666551348784, -0.44188752451017405),
    (0.36415488361261983, -0.623229064830767, 14.0, -2.845703379328632, -1.9344770018983455, 1.020329125732569, 0.034397509053141456, 0.10813546831680712),
    (0.46378843142870063, -0.7380658325667606, 22.0, -1.069483549357404, -0.4863741780848569, 0.1704344986081392, 0.01892768522470752, -0.005405757450712309),
    (0.0, -0.09990581829876458, 30.0, 4.3325473172119615, 0.611430741221773, 0.21636212495019763, -0.001620377134107404, -0.0014178014137085138),
    (0.6068230061641429, -0.391709700258021, 0.7, -2.661465962803157, 0.8681932178027596, 2.1211823712780493, 1.57354470197138, -0.46224150553154014),
    (-0.2114507258558913, 0.708753803402461, 22.0, 0.7080304751028219, -1.4836420046527188, -2.893999148846751, -0.0652868163759448, 0.08587955410037552),
    (-0.9157843591376886, -0.7072827933245396, 9.0, -2.223846467673092, 37.18432439436143, -17.078899767549146, -3.728624179283728, 2.880318939964823),
    (0.0, -0.04073504748021073, 0.7, -3.9166148660400655, 1.1677687113554953, -0.01622644933273957, 0.04005941921497561, -0.04801862103152331),
    (-0.5825333806464852, 0.27317481105048835, 0.7, 0.9318113609538363, 0.6442978848380504, 1.1484305757712485, 0.7263721578218733, -0.9757893565525654),
    (-0.2565919068135436, -0.09358379055230204, 14.0, -0.1497342939845856, 1.9477000333877337, 0.40416770728580714, 0.02983686968979072, 0.02580612138254632),
    (0.14914249085989506, 0.7330513356044446, 2.0, 1.1706528590473901, 1.3626162816230731, -1.6660015658143117, -0.46869194423621824, 0.44519072998180065),
    (0.0, 0.022088964655248164, 22.0, -2.853833873138007, 0.9366999601790438, -0.06404931480337796, 0.00032779234090103573, 0.0008841719702891987),
    (0.4788487796333025, 0.8808097921897649, 2.0, 1.7201608325634128, -0.21480854635786747, -2.468216168437669, 0.5657336317348358, 0.7368451400678524),
    (-0.22358012374952807, -0.034967577404764194, 0.7, -0.7225935396843077, 0.8928021497735337, -0.20199709563741025, 0.24387315259632908, 0.24587994854831485),
    (-0.7923206372701039, -0.9226070566124347, 5.0, -2.4066538273809583, 37.52821691243606, -8.400866410359596, -7.633491293112301, 0.7243284819325138),
    (0.0, 0.06474356935147055, 14.0, -0.08280453458722636, 0.9804566184132313, -0.16915002792536166, -0.0004244907689820253, -0.004582959424973062),
    (0.04014842473616276, 0.8584723728947836, 0.7, -3.4371183954086435, -0.4430030154367588, -0.02195984704923169, -0.9907069597382765, 0.11422073528010478),
    (-0.04140018583288296, 0.30701519328951643, 14.0, 1.0515877446687867, 1.1098262938223074, -1.0789630094729081, -0.03341429626021135, 0.00441259236396642),
    (-0.4395612148582899, 0.8347203569851502, 2.0, 2.290663028899491, 10.430532500864922, 1.2419455679573574, -3.5485464287353023, 0.46423273958138156),
    (0.0, -0.050187194257295765, 0.7, -2.978465266570082, 1.157960667113373, -0.017297418798157865, -0.015157562155968175, -0.0760090960754538),
    (-0.26242925925547467, 0.14433884580530387, 2.0, -3.7518324633558433, 0.3387717051816159, -0.6602934791107617, -0.03756740015995902, 0.06614716594693222),
    (-0.7231833802023497, -0.09930850594500584, 5.0, 1.4437748278880624, 0.6986387662373251, 2.5779863012381496, 0.40033850603251847, -0.05908360812142579),
    (0.38244318249730713, 0.16888053636035782, 2.0, 0.8268558079208495, 0.7464137418034418, -0.35341477027855484, -0.1026093512366088, 0.1111654946594004),
];
