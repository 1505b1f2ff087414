"""Gauss-Legendre nodes and weights on [-1, 1], 30 significant digits."""

_GL_TABLES = {
    8: (
        (
            -0.960289856497536231683560868569,
            -0.796666477413626739591553936476,
            -0.525532409916328985817739049189,
            -0.183434642495649804939476142360,
            0.183434642495649804939476142360,
            0.525532409916328985817739049189,
            0.796666477413626739591553936476,
            0.960289856497536231683560868569,
        ),
        (
            0.101228536290376259152531354310,
            0.222381034453374470544355994426,
            0.313706645877887287337962201987,
            0.362683783378361982965150449277,
            0.362683783378361982965150449277,
            0.313706645877887287337962201987,
            0.222381034453374470544355994426,
            0.101228536290376259152531354310,
        ),
    ),
    16: (
        (
            -0.989400934991649932596154173450,
            -0.944575023073232576077988415535,
            -0.865631202387831743880467897712,
            -0.755404408355003033895101194847,
            -0.617876244402643748446671764049,
            -0.458016777657227386342419442984,
            -0.281603550779258913230460501460,
            -0.0950125098376374401853193354250,
            0.0950125098376374401853193354250,
            0.281603550779258913230460501460,
            0.458016777657227386342419442984,
            0.617876244402643748446671764049,
            0.755404408355003033895101194847,
            0.865631202387831743880467897712,
            0.944575023073232576077988415535,
            0.989400934991649932596154173450,
        ),
        (
            0.0271524594117540948517805724560,
            0.0622535239386478928628438369944,
            0.0951585116824927848099251076022,
            0.124628971255533872052476282192,
            0.149595988816576732081501730547,
            0.169156519395002538189312079030,
            0.182603415044923588866763667969,
            0.189450610455068496285396723208,
            0.189450610455068496285396723208,
            0.182603415044923588866763667969,
            0.169156519395002538189312079030,
            0.149595988816576732081501730547,
            0.124628971255533872052476282192,
            0.0951585116824927848099251076022,
            0.0622535239386478928628438369944,
            0.0271524594117540948517805724560,
        ),
    ),
    32: (
        (
            -0.997263861849481563544981128665,
            -0.985611511545268335400175044631,
            -0.964762255587506430773811928118,
            -0.934906075937739689170919134835,
            -0.896321155766052123965307243719,
            -0.849367613732569970133693004968,
            -0.794483795967942406963097298970,
            -0.732182118740289680387426665091,
            -0.663044266930215200975115168663,
            -0.587715757240762329040745476402,
            -0.506899908932229390023747474378,
            -0.421351276130635345364119436172,
            -0.331868602282127649779916805730,
            -0.239287362252137074544603209166,
            -0.144471961582796493485186373599,
            -0.0483076656877383162348125704405,
            0.0483076656877383162348125704405,
            0.144471961582796493485186373599,
            0.239287362252137074544603209166,
            0.331868602282127649779916805730,
            0.421351276130635345364119436172,
            0.506899908932229390023747474378,
            0.587715757240762329040745476402,
            0.663044266930215200975115168663,
            0.732182118740289680387426665091,
            0.794483795967942406963097298970,
            0.849367613732569970133693004968,
            0.896321155766052123965307243719,
            0.934906075937739689170919134835,
            0.964762255587506430773811928118,
            0.985611511545268335400175044631,
            0.997263861849481563544981128665,
        ),
        (
            0.00701861000947009660040706373885,
            0.0162743947309056706051705622064,
            0.0253920653092620594557525897892,
            0.0342738629130214331026877322524,
            0.0428358980222266806568786466061,
            0.0509980592623761761961632446895,
            0.0586840934785355471452836373002,
            0.0658222227763618468376500637069,
            0.0723457941088485062253993564785,
            0.0781938957870703064717409188283,
            0.0833119242269467552221990746043,
            0.0876520930044038111427714627518,
            0.0911738786957638847128685771116,
            0.0938443990808045656391802376681,
            0.0956387200792748594190820022041,
            0.0965400885147278005667648300636,
            0.0965400885147278005667648300636,
            0.0956387200792748594190820022041,
            0.0938443990808045656391802376681,
            0.0911738786957638847128685771116,
            0.0876520930044038111427714627518,
            0.0833119242269467552221990746043,
            0.0781938957870703064717409188283,
            0.0723457941088485062253993564785,
            0.0658222227763618468376500637069,
            0.0586840934785355471452836373002,
            0.0509980592623761761961632446895,
            0.0428358980222266806568786466061,
            0.0342738629130214331026877322524,
            0.0253920653092620594557525897892,
            0.0162743947309056706051705622064,
            0.00701861000947009660040706373885,
        ),
    ),
}
