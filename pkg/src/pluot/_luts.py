"""Frozen 256-entry RGBA8 colormap tables (CC0 viridis/magma).

Generated by scripts/gen_colormaps.py; do not edit by hand."""

import base64

TABLES = {
"viridis": base64.b64decode(
    "RAFU/0QCVv9FBFf/RQVZ/0YHWv9GCFz/Rgpd/0YLXv9HDWD/Rw5h/0cQY/9HEWT/RxNl/0gU"
    "Z/9IFmj/SBdp/0gYav9IGmz/SBtt/0gcbv9IHW//SB9w/0ggcf9IIXP/SCN0/0gkdf9IJXb/"
    "SCZ3/0goeP9IKXn/Ryp6/0csev9HLXv/Ry58/0cvff9GMH7/RjJ+/0Yzf/9GNID/RTWB/0U3"
    "gf9FOIL/RDmD/0Q6g/9EO4T/Qz2E/0M+hf9CP4X/QkCG/0JBhv9BQof/QUSH/0BFiP9ARoj/"
    "P0eI/z9Iif8+SYn/PkqJ/z5Miv89TYr/PU6K/zxPiv88UIv/O1GL/ztSi/86U4v/OlSM/zlV"
    "jP85Voz/OFiM/zhZjP83Woz/N1uN/zZcjf82XY3/NV6N/zVfjf80YI3/NGGN/zNijf8zY43/"
    "MmSO/zJljv8xZo7/MWeO/zFojv8waY7/MGqO/y9rjv8vbI7/Lm2O/y5ujv8ub47/LXCO/y1x"
    "jv8scY7/LHKO/yxzjv8rdI7/K3WO/yp2jv8qd47/KniO/yl5jv8peo7/KXuO/yh8jv8ofY7/"
    "J36O/yd/jv8ngI7/JoGO/yaCjv8mgo7/JYOO/yWEjv8lhY7/JIaO/ySHjv8jiI7/I4mO/yOK"
    "jf8ii43/IoyN/yKNjf8hjo3/IY+N/yGQjf8hkYz/IJKM/yCSjP8gk4z/H5SM/x+Vi/8flov/"
    "H5eL/x+Yi/8fmYr/H5qK/x6biv8enIn/Hp2J/x+eif8fn4j/H6CI/x+hiP8foYf/H6KH/yCj"
    "hv8gpIb/IaWF/yGmhf8ip4X/IqiE/yOpg/8kqoP/JauC/yWsgv8mrYH/J62B/yiugP8pr3//"
    "KrB//yyxfv8tsn3/LrN8/y+0fP8xtXv/MrZ6/zS2ef81t3n/N7h4/zi5d/86unb/O7t1/z28"
    "dP8/vHP/QL1y/0K+cf9Ev3D/RsBv/0jBbv9KwW3/TMJs/07Da/9QxGr/UsVp/1TFaP9Wxmf/"
    "WMdl/1rIZP9cyGP/Xsli/2DKYP9jy1//Zcte/2fMXP9pzVv/bM1a/27OWP9wz1f/c9BW/3XQ"
    "VP930VP/etFR/3zSUP9/007/gdNN/4TUS/+G1Un/idVI/4vWRv+O1kX/kNdD/5PXQf+V2ED/"
    "mNg+/5vZPP+d2Tv/oNo5/6LaN/+l2zb/qNs0/6rcMv+t3DD/sN0v/7LdLf+13iv/uN4p/7re"
    "KP+93yb/wN8l/8LfI//F4CH/yOAg/8rhH//N4R3/0OEc/9LiG//V4hr/2OIZ/9rjGf/d4xj/"
    "3+MY/+LkGP/l5Bn/5+QZ/+rlGv/s5Rv/7+Uc//HlHf/05h7/9uYg//jmIf/75yP//ecl/w=="
),
"magma": base64.b64decode(
    "AAAE/wEABf8BAQb/AQEI/wIBCf8CAgv/AgIN/wMDD/8DAxL/BAQU/wUEFv8GBRj/BgUa/wcG"
    "HP8IBx7/CQcg/woIIv8LCST/DAkm/w0KKf8OCyv/EAst/xEML/8SDTH/Ew00/xQONv8VDjj/"
    "Fg87/xgPPf8ZED//GhBC/xwQRP8dEUf/HhFJ/yARS/8hEU7/IhFQ/yQSU/8lElX/JxJY/ykR"
    "Wv8qEVz/LBFf/y0RYf8vEWP/MRFl/zMQZ/80EGn/NhBr/zgQbP85D27/Ow9w/z0Pcf8/D3L/"
    "QA90/0IPdf9ED3b/RRB3/0cQeP9JEHj/ShB5/0wRev9OEXv/TxJ7/1ESfP9SE3z/VBN9/1YU"
    "ff9XFX7/WRV+/1oWfv9cFn//XRd//18Yf/9gGID/YhmA/2QagP9lGoD/ZxuA/2gcgf9qHIH/"
    "ax2B/20dgf9uHoH/cB+B/3Ifgf9zIIH/dSGB/3Yhgf94IoH/eSKC/3sjgv98I4L/fiSC/4Al"
    "gv+BJYH/gyaB/4Qmgf+GJ4H/iCeB/4kogf+LKYH/jCmB/44qgf+QKoH/kSuB/5MrgP+ULID/"
    "liyA/5gtgP+ZLYD/my5//5wuf/+eL3//oC9//6Ewfv+jMH7/pTF+/6Yxff+oMn3/qjN9/6sz"
    "fP+tNHz/rjR7/7A1e/+yNXv/szZ6/7U2ev+3N3n/uDd5/7o4eP+8OXj/vTl3/786d//AOnb/"
    "wjt1/8Q8df/FPHT/xz1z/8g+c//KPnL/zD9x/81Acf/PQHD/0EFv/9JCb//TQ27/1URt/9ZF"
    "bP/YRWz/2UZr/9tHav/cSGn/3klo/99KaP/gTGf/4k1m/+NOZf/kT2T/5VBk/+dSY//oU2L/"
    "6VRi/+pWYf/rV2D/7Fhg/+1aX//uW17/711e//BfXv/xYF3/8mJd//JkXP/zZVz/9Gdc//Rp"
    "XP/1a1z/9mxc//ZuXP/3cFz/93Jc//h0XP/4dlz/+Xhd//l5Xf/5e13/+n1e//p/Xv/6gV//"
    "+4Nf//uFYP/7h2H//Ilh//yKYv/8jGP//I5k//yQZf/9kmb//ZRn//2WaP/9mGn//Zpq//2b"
    "a//+nWz//p9t//6hbv/+o2///qVx//6ncv/+qXP//qp0//6sdv/+rnf//rB4//6yev/+tHv/"
    "/rZ8//63fv/+uX///ruB//69gv/+v4T//sGF//7Ch//+xIj//saK//7IjP/+yo3//syP//7N"
    "kP/+z5L//tGU//7Tlf/+1Zf//teZ//7Ymv/92pz//dye//3eoP/94KH//eKj//3jpf/95af/"
    "/eep//3pqv/966z//Oyu//zusP/88LL//PK0//z0tv/89rj//Pe5//z5u//8+73//P2//w=="
),
}
