"""paraferm - données de représentations des algèbres de parafermions K(g,k).

Sous-packages :
- Algebre : systèmes de racines, représentations finies, données de niveau k
- Series : q-séries formelles, fonctions de branchement, séries thêta
- Classification : étiquettes M^{Λ,λ}, courants simples, atlas des orbites
- Sandbox : algèbre affine universelle tronquée (base PBW)
- Database : cache SQLite des tables de multiplicités
- Rapports : documents JSON/CSV et affichage console
"""

__version__ = "0.1.0"
