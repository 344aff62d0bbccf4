             &      �            �      �      �      �	      �      �      8      D      8      �      <      �      x      �      �      T       �       :!      ^!      �#      (      �(      �*      v-      Z.      �4      <5      �8      �8      :      �<      �>      @A      B      �B      ~E      G      lG      �G      �H      �H      �P      �Q      T      $W      nX      �Y      �Y      H`      �b      <l      pn      �n      o      �r      s      �u      \~      V�      �      r�            ��      ʏ      ��      �      0�            ��      ޙ            ��      �      L�      ƨ      ��      :�      ��      ~�      0�      ֳ      F�      ~�      ��      ��      F�      ��      �      �      ��      �      ��      ��      ��      ��      n�      ��      R�      ��      ��      ��      ��      ��      F�      ��      ��           8     �     �     &     �     .     �     �     �!     &&     >&     ,(     �+     2     D4     �5     �7     �>     �>     ?     F     F     �H     �M     2N     4P     |P     �S     DT     �W     LX     >[     $a     pk     
l     Tm     |n     Lo     �o     �s     �w     |     8|     �|     *~     �~     d�     �     ��     ��     p�     V�     ĉ     J�     p�     ��     (�     ��     ș     �     ��     ��     H�     f�     (�     P�     ��     Ħ     8�     ��     p�     �     L�     �     µ     ��     z�     ��     P�     ��     �     ��     h�     ��     ��     ��     ��     ��     �     ��     ��     h�     l�     $�     ��     ��     R�     ��     ��     ��     X�     ^�     �     ��     ��     l     �           "     �     �     �     6     �     �          �     z          D)     �*     �+     �+     z,     t1     �4     >5     �7     D8     �<     0>     ~C     �F     �G     ,I     �I     �R     �U     xW     �Y     Z     �\     �]     b     �c     �e     ^g     n     �r     Lt     �y     �z     |�     ��     z�     ؆     �     �     �     ��     P�     V�     ��     ��     
�     >�     >�     ң      �     ��     B�     �     8�     D�     H�     D�     �     �     ��      �     L�     ��     z�     �     ��     ,�     ��     ��     ��     ��     ��     �     ��     h�     p�     l�     ��     .�     ��     (�     4�     ��     ��     �          �     �     ^     �     P           8      �      6&     n+     �5     d7     $:     Z=     tK     VL     �L     &O     ^Q     �V     �W     �_     �c     �e     �e     �f     �l     �o     Lq     �r     ~t     v     �w     �x     0y     �y     Xz     T{     �     ܄     V�     ��     ��     8�     :�     ܓ     ��     ��     R�     ��     &�     �     �     ��     ��     ��     ��     �     d�     �     |�     x�     Ъ     ګ     @�     B�     ��     ��     ޻     Ҽ     ��     t�     ��     J�     �     ��     ��     N�     ��     N�     F�     B�     ��     ��     ��     ��     �     �     �     �     �     �	     �     ~     `     �     J                �     �      #     �&     ~(     �(     +     +     �,     �,     �4     �7     �7     �7     p8     :      ;     ~<     �>     �>     �@     �F     �G     rH     �M      O     �O     TT     �T     �U      V     �W     �Y     D[     F]     �]     �_     �m     (r     �s     Pt     w     Bx     2y     �z     �|     \�     n�     Ĉ     ��     :�     >�     Z�     �     ��     ��     �     ��     �     ΢     �     ȥ     6�     F�     ��     l�     ��     ȭ     b�     ޯ     �     �     �     r�     &�     �     P�     ��     ��     �     F�     ��     ��     `�     F�     ��     �     ��     ��     ��      �     �     ��     ��     J�     �     z�     ��     ��     ��     �     ��     .�     ��     ��     ��     ��            4     �     �
          T     �     �     (     ^     �     @     �     �               �     �      \!     �"     z&     �&     �*     X+     �-     :.     �4     �4     $6     �8      >     H?     �?     *@     �A     pD     �E     ZH     �I     O     �P     .[     &]     &_     (_     .d     ne     xg     hh     �h     �i     l     2n     �u     v     {     �|     �|     �~     ��     ΀     ��      �     X�     \�     ��     ��     :�     L�     (�     �     Z�     *�     ��     ��     >�     l�     ��     l�     J�     n�     �     F�     ��     ��     ��     ��     ��     Z�     ��     �     l�     &�     ��     ��     ��     0�     p�     ��     ��     ��     ��     |�     ��     ��     L     <     $
     �
     �     �     R     �     �     �     L     \     �!     $     �$     x&     J'     �'     �-     �/     �1     �2     �7     v;     `>     ?     �?     h@     �C      E     <E     G     ~H     �H     nI     �N     NT     ^T      U     �W     �Y     Z     j\     F]      ^     �c     rd     �d     �f     �h     �p     �q     �q     �u     fy     �y     ~     �     �     \�     L�     �     �     8�     V�     �     �     ��     F�     ��     ��     ��     N�      �     ��     �     ��     ��     B�     f�     ��     "�     r�     �     �     P�     ��     ��     0�     ��     ��     ��     ��     ��     8�     ��     ��     �     @�     ��     8�     v�     0�     x�     \�     ��     ��     �     8     �     �     �     |     �     �     <     �      %     )     �)     �*     :,     �0     �3     �4     �6     $7     (9     ":     �=     �>     �F     NG     �G     �J     �J     �K     �L     pM     Q     �R     �S     pV     vV     �V     �W     �X     �Z     |[     D^     `g     jg      m     �o     �p     �q     rw     �{     �~     �     ��     �     X�     X�     ��     �     ��     .�     ��     ��     r�     �     P�     0�     ��     ��     ��     �     X�     ��     ��     ��     ҧ     p�     ~�     ��     ��     t�     �     @�     ��     f�     ��     �     ��     0�     ��     ��     ��     ��     8�     ��     0�     P�     V�     ��     �     Z�     ��      �     ^�     *�     L�     ��     
�     P�      �     �     ��     ��     ��     4�     4�     l�     ��     \�     F�     �      �      
     �     T     "     �     6     �     �     �     �     T!     �&     �&     �(     �*     �+     �.     �0     �0     H3     4     n4     |8     l9     \:     �;     0<     "=     ?     �?     �C     �E     �R     �W     JZ     �^     T`      e     �l     ~m     �n     pr     �s     �s     �y     6}     n}     |}     r�     n�     ��     ܆     ��     
�     ��     ��     l�     <�     �     �     F�     j�     D�     �     ��     <�     ��     ڪ     <�     ��     f�     ��     ��     ��     �     �     ��     �     ��     �     l�     l�     �     
�     �     d�     ��      �     B�     d�     ��     �     ��     \�     �      �      �     ��     B�     ��     B�     ��     ��     �	     @	     �	     �	     �
	     �	     �	     L	     d	     �	     �	     	     <	     	      	     l 	     p&	     ~(	     �(	     T)	     �)	     6+	     >1	     62	     �5	     $6	     L6	     h6	     �6	     �8	     �9	     �=	     �=	     ?	     @?	     �B	     C	     pD	     �D	     �I	     �L	     ~M	     �M	     bN	     T	     �^	     _	     ~b	     �f	     �g	     �h	     .k	     �m	     :o	     �q	     r	     �s	     �u	     �v	     w	     �x	     �	     @�	     ��	     n�	     �	     ��	     ��	     ��	     n�	     �	     `�	     �	     H�	     ��	     ��	     ާ	     ��	     Ү	     ^�	     Բ	     з	     &�	     ��	     .�	     ��	     ��	      �	     D�	     ��	     l�	     >�	     ��	     �	     ��	     <�	     ��	     ��	     ��	     ��	     d�	     �	     ��	     ��	     n�	     d�	     X�	     �	     B
     �
     �	
     R
     �
     L
     N
     �
     
     n"
     �#
     �&
     �+
     �,
     <-
     D-
     N-
     n.
     �.
     �/
     �/
     �0
     $2
     V5
     �9
     ;
     �C
     �J
     ZL
     �M
     ,R
     jR
     lR
     �R
     VY
     &[
     �`
     fa
     �d
     k
     |n
     �o
     <p
     �p
     �p
     �s
      x
     h|
     t}
     �}
     ��
     F�
     ��
     (�
     p�
     l�
     ��
     $�
     b�
     ��
     �
     �
     ��
     h�
     ��
     j�
     ��
     ��
     
     h�
     ��
     ĝ
     ڣ
     �
     n�
     ��
     ��
     ��
     N�
     v�
     Z�
     ڶ
     f�
     ��
     ��
      �
     ��
     f�
     ��
     T�
     �
     r�
     ��
     F�
     ��
     ��
     �
     ��
     ��
     ��
     ��
     L�
     ��
     ��
      �
     ��
     t�
     ��
     �
     ��
     V�
     2�
     6�
     ^�
     �
     ��
     ��
     �
     ��
     D     �     �     �          �     �	     
     v     �     l     �     �     j     �     �      !     �#     �$     &     '     �'     <)     �)     �)     J*     h*     T+     R0     >4     $7      ;     �>     �>     "A     �B     �C     �C     D     �E     �G     @K     L     �O     �P     U     �U     �U     8V     �W     �Y     n\     p\     �a     ji     xi     4j     (l     pl     �n     6s      v     &y     R     ��     D�     ~�     ��     ��     �     �     H�     :�     đ     ��     ��     ܝ     �     ޣ      �     j�     ^�     ��     h�      �     @�     ��     .�     ��     �     D�     �     h�     ��     �     ��     �     N�     �     B�     �     j�     4�     �     ��     t�     ��      �     "�     J�     
�     H�     ��     ��           �     �     P     �     �          �     `     2     "     `"     �$     \%     �,     *2     43     $5     �:     :;     �<     ,>     �>     �D     �P     �R     �S     U     �\     ]     �]     8b     �b     �d     ve     Ni     �j     �l     �m     8n     Pp     Bs     �t     fu     �{     �|     �}     ,     D�     ��     Ё     B�     �     �     F�     8�     �     ��     ʒ     P�     L�     "�     @�     ʝ     n�     ԡ     �     $�     n�     �     >�     ��     8�     @�     ��     N�     ��     H�     ��     ��     ��     F�     P�     ��     |�     (�     H�     ��     ��     ��     ��      �     ��     `�     ��     h�     N�     f�     x�     r�     B�     n�     ��     �     �     $�     D�     ��     8�     ��     ��     ��               �     �     �     �     �     �%     �'     �*     f+     .5     �5     �5     9     =     �F     TH     BK     xP     �P     jS     �T     xU     FW     �Y     �[     �d     �f     �h     �h      j     �j     \k     �k     Jl     Vl     �l     ^s     bt     u     �     ��     2�     R�     �     j�     ��     \�     H�     V�     ��     �     ؛     ��     6�     R�     H�     �     ī     ��     @�     �     ��     L�     Z�     P�     ��     D�     ��     h�     ��     ��     �     ��     B�     F�     x�     ��     ��     �     6�     ��     ��     f�     ��     p�     ��     d�     ��     
�     N�     ��           �      Z     �     ~	     �     �          �     �     $     X     �     �     �%     �'     <)     �)     �-     .     ".     �/     5     45     �5      6     �6     J9     �>     �B     �E     DH     (I     �M     4N     �N     �P     4[     <\     �]     �]     �^     �^     D_     (c     i     $k     �k     �l     o     �s     �w     jx     �x     >{     J}     �}     h~     �~     Z�     ��     �     ^�     `�     8�     ��     �     �     ��     �     ��     ��     �     �     ��     �     ��     �     .�     8�     *�     <�     @�     ��     Z�     <�     ��     ��     @�     ��     ��     �     L�     *�     Z�     J�     ��     $�     ^�     ��     �     �     �          P     �     �     �     �     �     �     �     "     L"     �+     �,     L/     �/     L1     V2     �7      ;     FA     �D      E     �E     ~H     �J     6K     `O     "Q     �T     �U     X     �Y     �Z     ~^     �`     �b     �c     Jk     l     �m     o     �q     r�     ބ     �     �     �     <�     ��     �     ș     �     ��     ��     ĝ     ��     N�     ئ     �     ̨     n�     ��     ��     h�     ܹ     |�     ,�     ��     ��     t�     J�     ��     ��     .�     ��     :�     P�     ��     ��     ��     $�     ��     �     V�     ��     �     �     �     �
          �     �     �     :!     �%     �'     �(     +     $1     �5     �6      7     B8     �8     9      :     ;     t;     �>     �?     �A     �A     ~F     *I     �K     <P     PP     �P     *Q     �Q     �U     �V     �W     �Z     �\     \^     `     �b     �c     hf     �f     �h     Vk     bl     fo     �o     �p     �q     �t     zw     z     P|     ~     N�     p�     H�     ��     .�     ��     ܑ     ��     ��     R�     x�     ��     ��     ��     �     j�     �     ��     D�     j�     ,�     ��     ,�     �     6�     ��     p�     (�     �     ��     ^�     P�     ��     ��     >�     ��     ��     ��     ��     ��     ��     ��     ��     ��     :�     �      �      �      f     �          <     b	     
     �
     �     �     ^          j     �          X     �     �     j     >      d$     x%     �%     '     �)     �*     �.     d0     �0     �0     b3     5     �6     F;     �G     I     fJ     6L     �N     �O     @P     �S     ZT     �X     �Z     ^     �`     �b     &f     �f     �g     |h     tm     �p     �r     �s     F     �     x�     ̄     t�     ��     А     đ     ��     �     ��     x�     �     �     (�     l�     ħ     D�      �     �     ��     h�     r�     ��     ��     n�     ��     ��     t�     �     X�     ��     2�     ��     6�     �     �     �     v�     ��     ��     x�     R�                �     �     B     �     ,     �     �     f      #     �(     @.     /     1     �4     �;     �=     �>     j?     
B     �E     �I     �J     2K     �M     .O     �P     �T     W     LW     �`     �a     Le     �k     �n     �o     �q      s     2v     �v     �w     .x     xz     �|     l      �     >�     ,�     ��     &�     ��     �     ƌ     ��     �     ��     P�     ��     B�     �     Ш     z�     ��     �     �     ȷ     j�     �     V�     ��     ��     ��     ��     �     ��     �     <�     ��     :�     ��     ��     2�     ��     @�     ��     ��     ��     `�     x�     x�     ��     "�     ��     ��     ��     6�     L�     ��     ��     ��     \�     ��     �     �     @�     F      �          �	     r     �          �     ^     ,     �          v     ""     �'     R)     �)     �+     �-     ^1     �5     �8     <:     $;     V;     `;     �>     tA     �C     �D     �E     �H     0J     �J     `K     �N     $S     �T     �W     �X     �\     �]     P`     �a     �i     Hl     �l     �l     �q     �s     hv     �z     |     4|          &�     �     ��     h�     b�     ��     ��     ��     ҙ     ��          �     �     ^�     Ȧ     ��     6�     .�     ��     ��     l�     ��     �     Ե     ��     Լ     ܿ     B�     ��     j�     ��     ��     ��     D�     ��     ��     h�     ��     ��     ^�     ��     ~�     ��     ��     4�     x�     ��     H�     ��     "�     �     B�     ��     0�     �      8          �     �          �     �     R     �     �     r     �     �     D     H      L!     �"     �"     (     8(     `(     �*     V+     �+     �-     f0     1     04     �5     �7     \:     &;     �<     �C     lI     �J     �M     NR     V     ]     �_     �`     �b     k     �m     �m     �s     �w     }     �~     ��     Z�     H�     Ɔ     ��     v�     6�     x�     Г     L�     �     (�     ��     ��     ��     v�     �     �     ��      �     �     �     b�     ��     �     �     n�     $�     h�     R�     x�     .�     R�     �     6�     p�     ��     ��     6�     �     ��     �     ��     ��     r�     l�     ��      �     ��     ��     ��     <�     ��     @�     ��     ��     ^�     T�     ��     j�     �     ��     ��     ��     ��     �     ��     j�     ��          f     T     T     �	     �          f     �          �     �     �*     p/     �0     1     �1     r4     �4     
;     �=     z>     �>     �C     �C     2D     �E     �E     �G     �H     2Q     �S     >U     �U     PV     �W     ZX     n[     &]     `     �`     �e     2m     �o     �p     �q     �r     t     �t     u     �v     nz     &|     X|     �~     V     <�     ��     ��     Z�     ��     �     Z�     ��     6�     |�     ��     �     *�     �     �     �     b�     ��     @�     �     ί     �     ��     ��     ��     .�     ��     2�     ��     ��     l�     ��     ��     L�     ��     �     ��     t�     ��     F�     ��     ��     ��     ��     ��     �     2�     ��     ��     �     ��     $�     ��     d�     �     �      �     L     X                x     p     �     �     �     �     "     2)     x*     �0     61     �1     �6     8     "9     <     �E     �E     �P     BT     �T     .V     pV     zX     �X     f\     ]     �^     �b     �f     �g     k     �k     �l     Jq     �q     �r     �w     @y     �{     �}     �     ȃ     >�     �     ��     �     ��     P�     ��     l�     �     ,�     j�     `�     B�     6�     F�     (�     �     @�     �     ��     <�     :�     Ⱦ     �     l�     ��     \�     ��     �     ��     ��     ��     ��     ��     X�     ^�     ��     ��     ��     ��     ��     0�     ,�     t�     ��     ��     ��     ��     ��           �     r
     �     L     �          x     �     �     Z          H     �          �     (!     z!     �$     �$     �(     \,     1     *2     >2     �5     87     L;     �;     Z?     �A      C     �F     �F     G     VG     �J     xK     �L     �P     �R     �U     �V     �W     �Y     �^     Xl     rm     �r     �r     �u     y     8{     V{     N|     T|     �|     0~     l�     ��     b�     ��     t�     ��     �     �     ��     ��     &�     ��     �     ʞ     Ƞ     ��     �     У     V�     ~�     ��     &�     ַ     ��     ֻ     �     ��     ��     �     ��     �     ��     @�     ��     ,�     ��     ��     ��      �     ��     �     L�     ��     ��     ��     ��     @�     8�     H�     ��     ,�     ��     �     �     �     �      �     
     ,
     P     �     d     z     �     �     :     �          �     >#     r'     �'     *     +     v+     ~,     �,     -     �/     �1     �1     5     �5     Z9     R:     BB     �F     �F     8I     �I     K     �N     �O     �P     �T     W     �W     �X     �\     �\     �\     �_     �b     fi     <k     l     Pl     nm     �m     Rp     �u     Tw     8{     ��     <�     @�      �     &�     ��     �     (�     ��     "�     ��     h�     X�     ��     Ҝ     ��     ��     l�     �     �     R�     :�     X�     :�     N�     R�     |�     Ȳ     r�     4�     6�     :�     �     T�     ��     v�     ��      �     ��     V�     ��     0�     ��     ��     T�     ��     ��     ��     j�     6�     F�     ��     ��     ��     4�     H�     �            �     �     �     �     �     :     �          �     �     �     T     
     P%      *     ,/     �8     �8     P:     �:     P=     �C     `D     6E     �F     �G     rH     xJ     �J     �K     hP     �P     �S     V     TV     rX     �Y     �Y     BZ     �^     �^     �_     <c     Tc     �e     rf     $i     zj     ,m     �n     �o     �q     �r     �w     x     z     8{     "|     �~     �     �     h�     ��     ��     H�     &�     x�     |�     >�     ��     ��     ��     d�     n�     ��     *�     �     ��     �      �     �     z�     �     ��     �     ,�     @�     b�     ��      �     ��     ��     ��     ��     ��     ��     ��     J�     ��     ��     j�     ��     ��     \�     ��     n           �     H     b     �     �     �     r     d     �          :     J          �     �     �"     �$     �$     �%     (     �*     �.     $5     �:     BD     �M     �N     dU     2V     ,W     NX     rZ     �]     �_     nc     Nf     Bg     0h     �i     �j     �l     �m     2n     :o     �s     Nv     �v     |y     �z     (�     ��     �     R�     ��     ��     �     ֋     B�     Ə     ��     А     �      �     �     ��     p�     ��     ��     @�     "�     h�     ؠ     v�     �     B�     �     ҧ     ا     0�     ��     ��     �     Ʒ     �     l�     ��     ��     2�     ��     ��     d�     x�     ��     �     ��     4�     >�     ��     ��     ��     �     X�     ��     |�     :�     ��     ��     ��      �     ��     :�     ��     b�     v�     �     ��     ��     �     v�     ��     �      P     �     8     <     �
     �
          �     �          �     �     �     b     �     �"     �)     �)     �*     L,     �,     �1     3     D5     07     >9     �=     ,@     X@     XD     F     \F     4M     �N     �O     �S     �T     �Y     Z     �Z     \^     _     "b     �c     �e     Df     <l     �p     q     Hw     �z     .{     �|     R     *�     L�     P�     <�     *�     ��     J�     V�     ��     ��     �     ��     ؚ     �     ҝ     4�     h�     �     Z�     ث     �     ԰     ޹     b�     N�     b�     n�     ��     ��     ��     ��     ��     �     ��     ��     ��      �     ��     $�     ��     ��     ��     ��     <�     F�      �     ��     ��     ��     R�     ~�     Z           .     �     H	     �	     �     �     �     �     �               �           `      T,     �0     $1     P4     5     6     J6     �;     <     �<     �B     �B     �H     �H     �H     M     LM     �M     �N     �P     �S     �V     �\     �\     Pb     $c     >e     �e     ,i     ^j     bj     jm     �n     �q     �v     �v     .|     �|     z     ހ     ��     ��     |�     ��     ��     &�     �     ��     ��     �      �     Φ     ,�     F�     z�     ��     `�     \�     `�     .�     t�     ��     ��     ��     ��     "�     ��     �     ��     <�     ��     2�     2�     ��     ��     ��     �     ��     ��     ��     �     >�     T�     ��     T�     ,�     ��     ��     �     ��     ��     �      �     �     ,     v     �          8     X     �     �     �     @     
"     �"     �#     $     �%     �&     �'     `(     )     >*     �*     �-     �/     �3     >     T@     A     �B     xE     �K     :N     �N     �S     8W     Z     \^     @`     Z`     �c     d     <i     �i     �j     Vn     |n     ho     �q     �q     r     ru     �y     �y     0{     ^|     ~     ��     �     ��     �     ��     �     ,�     f�     ,�     ��     &�     ��     ��     2�     ��     ,�     �     �     x�     ��     J�     0�     �     ҩ     �     ��     f�     ��     �     r�     �     $�     ޼     ��     f�     ,�     ��     �     �     $�     ��     r�     v�     �     ��     ��     6�     l�     �     X�     ��     �     ��     ��     v�     ��     ��     �     �     (�     N�     �     p�     ��      �     r�     ��     �     (     �     \     �     �     B     L     �     �     R               J     �     v     (     �     F     r     *     �,     �/     J4     d5     �7     �8     n;     N<     �?     �?     R@     �A     XD     �F     HG     K     �N     �P     �Q     bS     JY     :c     �g     h     Nk     �n     (o     �o     �u     �u     4{     �{     �{     �     